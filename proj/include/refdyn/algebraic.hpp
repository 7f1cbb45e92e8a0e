#pragma once

#include <compare>
#include <string>
#include <vector>

#include "refdyn/rational.hpp"
#include "refdyn/unipoly.hpp"

namespace refdyn {

/// Sturm chain p, p', -rem(p, p'), ... of a square-free polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
/// Number of distinct real roots of the square-free p in (a, b].
int count_roots(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b);

/// A real algebraic number: the unique root of a square-free primitive
/// integer polynomial inside an isolating interval. The interval is either
/// a single rational point (an exact root) or an open interval (lo, hi)
/// whose endpoints are not roots and which contains exactly one root.
class AlgebraicReal {
public:
    /// Exact rational value, with defining polynomial den*x - num.
    static AlgebraicReal from_rational(const Rational& r);
    /// Validates the isolating interval with a Sturm count.
    AlgebraicReal(const UniPoly& poly, const Rational& lo, const Rational& hi);

    [[nodiscard]] const UniPoly& poly() const { return poly_; }
    [[nodiscard]] const Rational& lo() const { return lo_; }
    [[nodiscard]] const Rational& hi() const { return hi_; }
    [[nodiscard]] Rational width() const { return hi_ - lo_; }
    [[nodiscard]] bool is_point() const { return lo_ == hi_; }
    /// True when the value itself is rational (degree-one defining polynomial
    /// or collapsed interval).
    [[nodiscard]] bool is_rational() const;
    /// The exact value; throws unless is_rational().
    [[nodiscard]] Rational rational_value() const;

    /// Same number with an isolating interval narrower than eps.
    [[nodiscard]] AlgebraicReal refined(const Rational& eps) const;
    [[nodiscard]] double to_double() const;
    /// "[lo, hi]" as decimals with `digits` places (lo rounded down, hi up).
    [[nodiscard]] std::string enclosure(int digits) const;
    [[nodiscard]] int sign() const;
    /// -a, defined by p(-x) on the mirrored interval.
    [[nodiscard]] AlgebraicReal negated() const;
    [[nodiscard]] AlgebraicReal abs() const { return sign() < 0 ? negated() : *this; }

private:
    AlgebraicReal() = default;
    UniPoly poly_;
    Rational lo_;
    Rational hi_;
};

/// Exact comparison; equality is decided by a common factor having a root
/// in the overlap of the isolating intervals.
std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);
inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b); }

/// One AlgebraicReal per distinct real root, sorted ascending.
std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p);
/// Free-function form of AlgebraicReal::refined.
AlgebraicReal refine(const AlgebraicReal& a, const Rational& eps);

/// a^2, exactly.
AlgebraicReal square(const AlgebraicReal& a);
/// r * a, exactly.
AlgebraicReal scaled(const AlgebraicReal& a, const Rational& r);

/// Rounding helpers for decimal enclosures.
std::string decimal_floor(const Rational& r, int digits);
std::string decimal_ceil(const Rational& r, int digits);

}  // namespace refdyn
