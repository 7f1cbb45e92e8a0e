#include "refdyn/rational.hpp"

#include <limits>

namespace refdyn {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw Error("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s, 10));
        }
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal '" + s + "'");
    }
}

std::string Rational::to_fraction_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return to_fraction_string();
}

std::string Rational::to_decimal(int digits) const {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Integer scaled = abs(q_.get_num()) * scale;
    Integer whole;
    mpz_tdiv_q(whole.get_mpz_t(), scaled.get_mpz_t(), q_.get_den().get_mpz_t());
    std::string body = whole.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (sign() < 0 ? "-" : "") + body;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
    return {n, d};
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

Rational power_of_ten_inverse(int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return {Integer(1), scale};
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool fits_int64(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

std::int64_t to_int64(const Integer& z) {
    if (!fits_int64(z)) throw Error("integer does not fit in 64 bits");
    return z.get_si();
}

}  // namespace refdyn
