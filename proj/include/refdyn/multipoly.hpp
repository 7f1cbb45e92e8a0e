#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "refdyn/rational.hpp"
#include "refdyn/series.hpp"

namespace refdyn {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    /// The coordinate function x_index.
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(const Rational& c, Exponent exp);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Exponent, Rational>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] Rational coeff(const Exponent& exp) const;
    void add_term(const Exponent& exp, const Rational& c);

    /// Maximum total degree; -1 for zero.
    [[nodiscard]] int degree() const;
    /// True when every term has total degree d (the zero polynomial counts).
    [[nodiscard]] bool is_homogeneous(int d) const;
    [[nodiscard]] bool is_homogeneous() const;
    /// True when no stored term involves the variables in `indices`.
    [[nodiscard]] bool avoids(std::span<const int> indices) const;

    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;
    /// Composition: replaces x_i by values[i]; all values share a variable count.
    [[nodiscard]] MultiPoly substitute(std::span<const MultiPoly> values) const;
    /// Sets x_index to a rational value, keeping the variable count.
    [[nodiscard]] MultiPoly specialize(int index, const Rational& value) const;
    [[nodiscard]] MultiPoly derivative(int index) const;

    /// Componentwise minimum of all exponents (the monomial content).
    [[nodiscard]] Exponent monomial_content() const;
    /// Exact division by a monomial; throws if some term is not divisible.
    [[nodiscard]] MultiPoly divide_monomial(const Exponent& exp) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void check_compatible(const MultiPoly& o) const;
    int nvars_ = 0;
    std::map<Exponent, Rational> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

/// Substitutes truncated power series for the variables. All arguments must
/// share one truncation order and their count must equal the variable count.
TruncatedSeries substitute_series(const MultiPoly& f, std::span<const TruncatedSeries> args);

/// {"vars": n, "terms": [{"exp": [...], "coef": "a/b"}]}
nlohmann::json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);

}  // namespace refdyn
