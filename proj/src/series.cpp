#include "refdyn/series.hpp"

namespace refdyn {

ModP ModP::from_signed(std::int64_t v) {
    if (v >= 0) return ModP(static_cast<std::uint64_t>(v));
    // Magnitude of v as unsigned, safe for INT64_MIN.
    const std::uint64_t m = ~static_cast<std::uint64_t>(v) + 1;
    return -ModP(m);
}

namespace {

ModP reduce(const Integer& z) {
    Integer r;
    const Integer p(std::to_string(ModP::kPrime));
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    return ModP(static_cast<std::uint64_t>(std::stoull(r.get_str())));
}

}  // namespace

ModP ModP::from_rational(const Rational& r) {
    const ModP d = reduce(r.den());
    if (d.is_zero()) throw Error("denominator vanishes modulo the prime");
    return reduce(r.num()) * d.inverse();
}

ModP ModP::inverse() const {
    if (is_zero()) throw Error("inverse of zero modulo the prime");
    // Fermat: a^(p-2).
    ModP result(1);
    ModP base = *this;
    std::uint64_t e = kPrime - 2;
    while (e > 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

}  // namespace refdyn
