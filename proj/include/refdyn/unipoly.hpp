#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "refdyn/rational.hpp"

namespace refdyn {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    static UniPoly x() { return monomial(Rational(1), 1); }
    /// Builds from integer coefficients given highest degree first,
    /// e.g. from_descending({1, -5, -2}) is x^2 - 5x - 2.
    static UniPoly from_descending(std::initializer_list<long> coeffs);

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
    [[nodiscard]] Rational coeff(int k) const;
    [[nodiscard]] Rational leading() const;

    [[nodiscard]] Rational eval(const Rational& x) const;
    [[nodiscard]] int sign_at(const Rational& x) const { return eval(x).sign(); }
    [[nodiscard]] UniPoly derivative() const;
    [[nodiscard]] UniPoly monic() const;
    /// Integer coefficients with content 1 and positive leading coefficient.
    [[nodiscard]] UniPoly primitive() const;
    /// Coefficients of primitive(), lowest degree first.
    [[nodiscard]] std::vector<Integer> integer_coeffs() const;
    [[nodiscard]] bool has_integer_coeffs() const;
    /// p(-x).
    [[nodiscard]] UniPoly reflect() const;
    /// p(x) composed with q(x).
    [[nodiscard]] UniPoly compose(const UniPoly& q) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    /// Human-readable form in the variable `var`, highest degree first.
    [[nodiscard]] std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of exact division a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);
/// Monic greatest common divisor (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly lcm(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned exponent);
/// Square-free part, returned primitive.
UniPoly square_free_part(const UniPoly& p);
/// Square-free decomposition p = c * prod f_i^i (Yun); returns (f_i, i)
/// with nonconstant primitive f_i.
std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p);
/// Cauchy bound: every complex root z satisfies |z| < bound.
Rational root_bound(const UniPoly& p);

}  // namespace refdyn
