#include "refdyn/algebraic.hpp"

#include <algorithm>

#include "refdyn/factor.hpp"

namespace refdyn {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps signs and tames coefficient growth.
        const UniPoly prim = r.primitive();
        const int s = (r.leading().sign() == prim.leading().sign()) ? 1 : -1;
        chain.push_back(prim * Rational(-s));
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

namespace {

int variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int v = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = q.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int count_roots(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    if (!(a < b)) return 0;
    return variations(chain, a) - variations(chain, b);
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
    AlgebraicReal a;
    a.poly_ = UniPoly{-r, Rational(1)}.primitive();
    a.lo_ = r;
    a.hi_ = r;
    return a;
}

AlgebraicReal::AlgebraicReal(const UniPoly& poly, const Rational& lo, const Rational& hi)
    : poly_(square_free_part(poly)), lo_(lo), hi_(hi) {
    if (poly_.degree() < 1) throw Error("algebraic number needs a nonconstant polynomial");
    if (hi_ < lo_) throw Error("isolating interval is reversed");
    if (lo_ == hi_) {
        if (!poly_.eval(lo_).is_zero()) throw Error("point interval is not a root");
        return;
    }
    if (poly_.eval(lo_).is_zero() || poly_.eval(hi_).is_zero()) {
        throw Error("isolating interval endpoints must not be roots");
    }
    if (count_roots(sturm_sequence(poly_), lo_, hi_) != 1) {
        throw Error("interval does not isolate exactly one root");
    }
}

bool AlgebraicReal::is_rational() const { return is_point() || poly_.degree() == 1; }

Rational AlgebraicReal::rational_value() const {
    if (is_point()) return lo_;
    if (poly_.degree() == 1) return -poly_.coeff(0) / poly_.coeff(1);
    throw Error("algebraic number is irrational");
}

AlgebraicReal AlgebraicReal::refined(const Rational& eps) const {
    if (eps.sign() <= 0) throw Error("refinement tolerance must be positive");
    AlgebraicReal out = *this;
    if (out.is_point()) return out;
    if (poly_.degree() == 1) return from_rational(rational_value());
    const int slo = poly_.sign_at(out.lo_);
    while (!(out.hi_ - out.lo_ < eps)) {
        const Rational mid = midpoint(out.lo_, out.hi_);
        const int s = poly_.sign_at(mid);
        if (s == 0) {
            out.lo_ = mid;
            out.hi_ = mid;
            break;
        }
        if (s == slo) {
            out.lo_ = mid;
        } else {
            out.hi_ = mid;
        }
    }
    return out;
}

double AlgebraicReal::to_double() const {
    if (is_point()) return lo_.to_double();
    const AlgebraicReal r = refined(pow(Rational(1, 2), 60) * (refdyn::abs(lo_) + Rational(1)));
    return midpoint(r.lo_, r.hi_).to_double();
}

int AlgebraicReal::sign() const {
    if (is_point()) return lo_.sign();
    if (lo_.sign() >= 0) return 1;
    if (hi_.sign() <= 0) return -1;
    // Interval straddles zero: zero is the root iff p(0) = 0.
    if (poly_.eval(Rational(0)).is_zero()) return 0;
    const int s0 = poly_.sign_at(Rational(0));
    return s0 == poly_.sign_at(lo_) ? 1 : -1;
}

AlgebraicReal AlgebraicReal::negated() const {
    AlgebraicReal a;
    a.poly_ = poly_.reflect().primitive();
    a.lo_ = -hi_;
    a.hi_ = -lo_;
    return a;
}

std::string decimal_floor(const Rational& r, int digits) {
    const Rational scaled = r / power_of_ten_inverse(digits);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
    return Rational(q, Integer(1)).operator*=(power_of_ten_inverse(digits)).to_decimal(digits);
}

std::string decimal_ceil(const Rational& r, int digits) {
    const Rational scaled = r / power_of_ten_inverse(digits);
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
    return Rational(q, Integer(1)).operator*=(power_of_ten_inverse(digits)).to_decimal(digits);
}

std::string AlgebraicReal::enclosure(int digits) const {
    return "[" + decimal_floor(lo_, digits) + ", " + decimal_ceil(hi_, digits) + "]";
}

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) return a.rational_value() <=> b.rational_value();
    AlgebraicReal x = a;
    AlgebraicReal y = b;
    const UniPoly g = gcd(x.poly(), y.poly());
    const auto g_chain = g.degree() >= 1 ? sturm_sequence(square_free_part(g)) : std::vector<UniPoly>{};
    for (;;) {
        if (x.hi() < y.lo()) return std::strong_ordering::less;
        if (y.hi() < x.lo()) return std::strong_ordering::greater;
        if (g.degree() >= 1) {
            // A common root in the closed overlap is the root of both.
            const Rational lo = std::max(x.lo(), y.lo());
            const Rational hi = std::min(x.hi(), y.hi());
            if (g.eval(lo).is_zero() || count_roots(g_chain, lo, hi) > 0) return std::strong_ordering::equal;
        }
        if (!x.is_point()) x = x.refined(x.width() / Rational(2));
        if (!y.is_point()) y = y.refined(y.width() / Rational(2));
    }
}

std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("cannot isolate roots of the zero polynomial");
    std::vector<AlgebraicReal> out;
    if (p.degree() == 0) return out;
    UniPoly f = square_free_part(p);
    // Exact rational roots come back as points; the rest is isolated on the
    // cofactor. Coefficients too large for divisor search skip this step.
    try {
        for (const auto& r : rational_roots(f)) {
            out.push_back(AlgebraicReal::from_rational(r));
            f = exact_div(f, UniPoly{-r, Rational(1)}).primitive();
        }
    } catch (const Error&) {
    }
    if (f.degree() < 1) {
        std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; });
        return out;
    }
    const auto chain = sturm_sequence(f);
    const Rational bound = root_bound(f);
    // Work list of half-open intervals (lo, hi] with known root counts.
    struct Piece {
        Rational lo, hi;
        int count;
    };
    std::vector<Piece> work{{-bound, bound, count_roots(chain, -bound, bound)}};
    while (!work.empty()) {
        Piece piece = work.back();
        work.pop_back();
        if (piece.count == 0) continue;
        const bool hi_is_root = f.eval(piece.hi).is_zero();
        if (piece.count == 1 && !hi_is_root && !f.eval(piece.lo).is_zero()) {
            out.emplace_back(f, piece.lo, piece.hi);
            continue;
        }
        if (piece.count == 1 && hi_is_root) {
            out.push_back(AlgebraicReal::from_rational(piece.hi));
            continue;
        }
        const Rational mid = midpoint(piece.lo, piece.hi);
        work.push_back({piece.lo, mid, count_roots(chain, piece.lo, mid)});
        work.push_back({mid, piece.hi, count_roots(chain, mid, piece.hi)});
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; });
    return out;
}

AlgebraicReal refine(const AlgebraicReal& a, const Rational& eps) { return a.refined(eps); }

AlgebraicReal square(const AlgebraicReal& a) {
    if (a.is_rational()) return AlgebraicReal::from_rational(a.rational_value() * a.rational_value());
    if (a.sign() < 0) return square(a.negated());
    // p(x) = E(x^2) + x O(x^2) gives E(y)^2 - y O(y)^2, which vanishes at a^2.
    std::vector<Rational> even, odd;
    const auto& c = a.poly().coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) (k % 2 == 0 ? even : odd).push_back(c[k]);
    const UniPoly e(even), o(odd);
    const auto roots = isolate_real_roots(e * e - UniPoly::x() * o * o);
    for (unsigned bits = 16; bits <= 4096; bits *= 2) {
        const Rational eps = pow(Rational(Integer(1), Integer(2)), bits);
        const AlgebraicReal fine = a.refined(eps);
        const Rational lo = fine.lo() * fine.lo(), hi = fine.hi() * fine.hi();
        std::vector<const AlgebraicReal*> hits;
        for (const auto& r : roots) {
            if (!(r.refined(eps).hi() < lo) && !(hi < r.refined(eps).lo())) hits.push_back(&r);
        }
        if (hits.size() == 1) return *hits.front();
    }
    throw Error("could not isolate the square of an algebraic number");
}

AlgebraicReal scaled(const AlgebraicReal& a, const Rational& r) {
    if (r == 0) return AlgebraicReal::from_rational(Rational(0));
    if (a.is_rational()) return AlgebraicReal::from_rational(a.rational_value() * r);
    // r a is a root of p(x / r).
    std::vector<Rational> c = a.poly().coeffs();
    Rational f(1);
    for (auto& x : c) {
        x = x * f;
        f = f / r;
    }
    const UniPoly q = UniPoly(c).primitive();
    return r.sign() > 0 ? AlgebraicReal(q, a.lo() * r, a.hi() * r) : AlgebraicReal(q, a.hi() * r, a.lo() * r);
}

}  // namespace refdyn
