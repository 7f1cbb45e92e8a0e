#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace refdyn {

using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(v) {}                   // NOLINT(google-explicit-constructor)
    Rational(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT
    Rational(unsigned long v) : q_(v) {}         // NOLINT(google-explicit-constructor)
    Rational(unsigned v) : q_(v) {}              // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}        // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "a", "-a" or "a/b".
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer num() const { return q_.get_num(); }
    [[nodiscard]] Integer den() const { return q_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    /// "a/b" with explicit denominator (serialization form).
    [[nodiscard]] std::string to_fraction_string() const;
    /// "a" for integers, "a/b" otherwise.
    [[nodiscard]] std::string to_string() const;
    /// Decimal rendering truncated toward zero after `digits` places.
    [[nodiscard]] std::string to_decimal(int digits) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);
/// Midpoint of two rationals.
Rational midpoint(const Rational& a, const Rational& b);
/// 10^-digits.
Rational power_of_ten_inverse(int digits);

/// Integer helpers.
std::string to_string(const Integer& z);
bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace refdyn
