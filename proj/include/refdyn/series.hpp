#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "refdyn/rational.hpp"

namespace refdyn {

/// Element of the prime field Z/(2^61 - 1). Used where exact rational
/// coefficients would grow out of hand. Reduction is a ring homomorphism
/// on rationals whose denominators are prime to p, so a nonzero residue
/// certifies a nonzero rational.
class ModP {
public:
    static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

    constexpr ModP() = default;
    constexpr explicit ModP(std::uint64_t v) : v_(v % kPrime) {}
    static ModP from_signed(std::int64_t v);
    /// Reduction of a rational; throws if the denominator vanishes mod p.
    static ModP from_rational(const Rational& r);

    [[nodiscard]] constexpr std::uint64_t value() const { return v_; }
    [[nodiscard]] constexpr bool is_zero() const { return v_ == 0; }
    [[nodiscard]] ModP inverse() const;

    friend ModP operator+(ModP a, ModP b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= kPrime) s -= kPrime;
        return raw(s);
    }
    friend ModP operator-(ModP a, ModP b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kPrime - b.v_); }
    friend ModP operator-(ModP a) { return raw(a.v_ == 0 ? 0 : kPrime - a.v_); }
    friend ModP operator*(ModP a, ModP b) {
        const unsigned __int128 w = static_cast<unsigned __int128>(a.v_) * b.v_;
        std::uint64_t lo = static_cast<std::uint64_t>(w & kPrime);
        std::uint64_t hi = static_cast<std::uint64_t>(w >> 61);
        std::uint64_t s = lo + hi;
        while (s >= kPrime) s -= kPrime;
        return raw(s);
    }
    ModP& operator+=(ModP o) { return *this = *this + o; }
    ModP& operator-=(ModP o) { return *this = *this - o; }
    ModP& operator*=(ModP o) { return *this = *this * o; }
    friend bool operator==(ModP a, ModP b) = default;

private:
    static constexpr ModP raw(std::uint64_t v) {
        ModP m;
        m.v_ = v;
        return m;
    }
    std::uint64_t v_ = 0;
};

template <typename Coeff>
inline bool coeff_is_zero(const Coeff& c) { return c.is_zero(); }

/// Power series in a local parameter t, known modulo t^order.
/// Coefficients at index >= order are undefined and never read.
template <typename Coeff>
class Series {
public:
    Series() = default;
    Series(std::vector<Coeff> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
        if (order < 0) throw Error("negative truncation order");
        c_.resize(static_cast<std::size_t>(order));
    }
    static Series zero(int order) { return Series(std::vector<Coeff>{}, order); }
    static Series constant(const Coeff& c, int order) { return Series(std::vector<Coeff>{c}, order); }
    /// c * t^k.
    static Series monomial(const Coeff& c, int k, int order) {
        std::vector<Coeff> v(static_cast<std::size_t>(order));
        if (k < order) v[static_cast<std::size_t>(k)] = c;
        return Series(std::move(v), order);
    }

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const std::vector<Coeff>& coeffs() const { return c_; }
    [[nodiscard]] const Coeff& coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, const Coeff& v) { c_.at(static_cast<std::size_t>(k)) = v; }

    /// Index of the lowest nonzero coefficient, or nullopt when every
    /// stored coefficient vanishes.
    [[nodiscard]] std::optional<int> try_valuation() const {
        for (int k = 0; k < order_; ++k) {
            if (!coeff_is_zero(c_[static_cast<std::size_t>(k)])) return k;
        }
        return std::nullopt;
    }

    /// Divides by t^k; the result is known modulo t^(order - k).
    [[nodiscard]] Series shifted_down(int k) const {
        if (k < 0 || k > order_) throw Error("invalid shift of truncated series");
        std::vector<Coeff> v(c_.begin() + k, c_.end());
        return Series(std::move(v), order_ - k);
    }

    /// Keeps the first `order` coefficients.
    [[nodiscard]] Series truncated(int order) const {
        if (order > order_) throw Error("cannot extend truncation order");
        std::vector<Coeff> v(c_.begin(), c_.begin() + order);
        return Series(std::move(v), order);
    }

    friend Series operator+(const Series& a, const Series& b) {
        const int n = std::min(a.order_, b.order_);
        std::vector<Coeff> v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) v[k] = a.c_[k] + b.c_[k];
        return Series(std::move(v), n);
    }
    friend Series operator-(const Series& a, const Series& b) {
        const int n = std::min(a.order_, b.order_);
        std::vector<Coeff> v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) v[k] = a.c_[k] - b.c_[k];
        return Series(std::move(v), n);
    }
    friend Series operator*(const Series& a, const Series& b) {
        const int n = std::min(a.order_, b.order_);
        std::vector<Coeff> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (int j = 0; i + j < n; ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Series(std::move(v), n);
    }
    friend Series operator*(const Coeff& s, const Series& a) {
        std::vector<Coeff> v(a.c_);
        for (auto& c : v) c = s * c;
        return Series(std::move(v), a.order_);
    }
    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Coeff> c_;
    int order_ = 0;
};

using TruncatedSeries = Series<Rational>;

/// Default truncation order for series computations.
inline constexpr int kDefaultSeriesOrder = 64;

/// Order of vanishing at t = 0. Throws when every stored coefficient is
/// zero, which means the true valuation is at least the truncation order.
template <typename Coeff>
int valuation(const Series<Coeff>& s) {
    if (auto v = s.try_valuation()) return *v;
    throw Error("valuation exceeds truncation order " + std::to_string(s.order()));
}

}  // namespace refdyn
