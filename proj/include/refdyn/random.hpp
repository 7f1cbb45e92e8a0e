#pragma once

#include <cstdint>
#include <random>

#include "refdyn/rational.hpp"

namespace refdyn {

/// Seeded generator with a fixed reduction scheme, so that draws are the
/// same on every standard library (std distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        if (hi < lo) throw Error("empty random range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }
    /// Integer in [-bound, bound].
    long symmetric(long bound) { return uniform(-bound, bound); }
    /// Nonzero integer in [-bound, bound].
    long nonzero(long bound) {
        const long v = uniform(1, bound);
        return (eng_() & 1U) ? v : -v;
    }
    /// a/b with |a| <= bound and 1 <= b <= bound.
    Rational rational(long bound) { return {Integer(symmetric(bound)), Integer(uniform(1, bound))}; }
    Rational nonzero_rational(long bound) { return {Integer(nonzero(bound)), Integer(uniform(1, bound))}; }
    std::uint64_t next() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace refdyn
