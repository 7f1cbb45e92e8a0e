#pragma once

#include <string>

#include "refdyn/unipoly.hpp"

namespace refdyn {

/// Element of Q[x]/(m) for a monic irreducible m, stored as a reduced
/// representative. Elements with different moduli never mix.
class NumberFieldElement {
public:
    NumberFieldElement() = default;
    /// Reduces rep modulo the monic form of modulus.
    NumberFieldElement(const UniPoly& modulus, const UniPoly& rep);
    static NumberFieldElement from_rational(const UniPoly& modulus, const Rational& c);
    /// The class of x, a root of the modulus.
    static NumberFieldElement generator(const UniPoly& modulus);

    [[nodiscard]] const UniPoly& modulus() const { return m_; }
    [[nodiscard]] const UniPoly& rep() const { return rep_; }
    [[nodiscard]] bool is_zero() const { return rep_.is_zero(); }
    [[nodiscard]] NumberFieldElement inverse() const;
    [[nodiscard]] std::string to_string(const std::string& var = "a") const;

    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b);
    friend NumberFieldElement operator-(const NumberFieldElement& a);
    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) = default;

private:
    UniPoly m_;
    UniPoly rep_;
};

}  // namespace refdyn
