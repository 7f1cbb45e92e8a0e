#include "refdyn/number_field.hpp"

namespace refdyn {
namespace {

void check_same(const NumberFieldElement& a, const NumberFieldElement& b) {
    if (a.modulus() != b.modulus()) throw Error("number field elements with different moduli");
}

}  // namespace

NumberFieldElement::NumberFieldElement(const UniPoly& modulus, const UniPoly& rep) {
    if (modulus.degree() < 1) throw Error("number field modulus must be nonconstant");
    m_ = modulus.monic();
    rep_ = divmod(rep, m_).second;
}

NumberFieldElement NumberFieldElement::from_rational(const UniPoly& modulus, const Rational& c) {
    return NumberFieldElement(modulus, UniPoly::constant(c));
}

NumberFieldElement NumberFieldElement::generator(const UniPoly& modulus) {
    return NumberFieldElement(modulus, UniPoly::x());
}

NumberFieldElement NumberFieldElement::inverse() const {
    if (is_zero()) throw Error("inverse of zero in a number field");
    // Extended Euclid on (rep, m): track s with s*rep = r (mod m).
    UniPoly r0 = m_, r1 = rep_;
    UniPoly s0, s1 = UniPoly::constant(Rational(1));
    while (r1.degree() > 0) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.is_zero()) throw Error("element is a zero divisor; modulus is reducible");
    return NumberFieldElement(m_, s1 * (Rational(1) / r1.coeff(0)));
}

std::string NumberFieldElement::to_string(const std::string& var) const {
    return rep_.is_zero() ? "0" : rep_.to_string(var);
}

NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same(a, b);
    return NumberFieldElement(a.m_, a.rep_ + b.rep_);
}

NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same(a, b);
    return NumberFieldElement(a.m_, a.rep_ - b.rep_);
}

NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same(a, b);
    return NumberFieldElement(a.m_, a.rep_ * b.rep_);
}

NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same(a, b);
    return a * b.inverse();
}

NumberFieldElement operator-(const NumberFieldElement& a) { return NumberFieldElement(a.m_, -a.rep_); }

}  // namespace refdyn
