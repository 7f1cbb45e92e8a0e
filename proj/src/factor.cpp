#include "refdyn/factor.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace refdyn {
namespace {

// Positive divisors of |n| (n != 0) by trial division.
std::vector<Integer> divisors(const Integer& n) {
    Integer m = abs(n);
    if (m == 0) throw Error("divisors of zero requested");
    if (m > Integer("1000000000000")) throw Error("coefficient too large for divisor enumeration");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(Integer(m / d));
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

UniPoly from_integers(const std::vector<Integer>& z) {
    std::vector<Rational> v;
    for (const auto& c : z) v.emplace_back(c);
    return UniPoly(std::move(v));
}

Integer eval_int(const std::vector<Integer>& z, long x) {
    Integer acc = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Exhaustive search for a factor of degree k of the primitive integer
// polynomial g, which has no rational roots.
std::optional<UniPoly> find_factor(const UniPoly& g, int k) {
    const auto a = g.integer_coeffs();
    // ceil(||g||_2)
    Integer norm2 = 0;
    for (const auto& c : a) norm2 += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    if (norm * norm < norm2) norm += 1;

    const std::vector<long> probes{1, -1, 2, -2, 3};
    std::vector<Integer> g_at;
    for (long x : probes) g_at.push_back(eval_int(a, x));

    std::vector<Integer> b(static_cast<std::size_t>(k) + 1);
    std::optional<UniPoly> found;
    std::function<void(int)> search = [&](int i) {
        if (found) return;
        if (i == k) {
            // Leading coefficient already chosen; test the candidate.
            for (std::size_t j = 0; j < probes.size(); ++j) {
                const Integer hv = eval_int(b, probes[j]);
                if (hv == 0) return;
                if (g_at[j] % hv != 0) return;
            }
            const UniPoly h = from_integers(b);
            if (divides(h, g)) found = h;
            return;
        }
        const Integer bound = binomial(k, i) * norm;
        for (Integer c = -bound; c <= bound && !found; ++c) {
            b[static_cast<std::size_t>(i)] = c;
            search(i + 1);
        }
    };
    for (const auto& lead : divisors(a.back())) {
        b[static_cast<std::size_t>(k)] = lead;
        for (const auto& d0 : divisors(a.front())) {
            for (int s : {1, -1}) {
                b[0] = d0 * s;
                search(1);
                if (found) return found;
            }
        }
    }
    return std::nullopt;
}

void factor_rootless(const UniPoly& g, std::vector<UniPoly>& out) {
    const int n = g.degree();
    if (n <= 3) {
        out.push_back(g);
        return;
    }
    if (n > kMaxFactorSearchDegree) {
        throw Error("factor search supports rational-root-free components up to degree " +
                    std::to_string(kMaxFactorSearchDegree));
    }
    for (int k = 2; k <= n / 2; ++k) {
        if (auto h = find_factor(g, k)) {
            factor_rootless(h->primitive(), out);
            factor_rootless(exact_div(g, *h).primitive(), out);
            return;
        }
    }
    out.push_back(g);
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    UniPoly f = square_free_part(p);
    if (f.degree() < 1) return roots;
    if (f.coeff(0).is_zero()) {
        roots.emplace_back(0);
        f = exact_div(f, UniPoly::x()).primitive();
    }
    if (f.degree() >= 1) {
        const auto a = f.integer_coeffs();
        for (const auto& q : divisors(a.back())) {
            for (const auto& num : divisors(a.front())) {
                for (int s : {1, -1}) {
                    const Rational r(Integer(num * s), q);
                    if (f.eval(r).is_zero() &&
                        std::find(roots.begin(), roots.end(), r) == roots.end()) {
                        roots.push_back(r);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::pair<UniPoly, int>> factor_over_rationals(const UniPoly& p) {
    if (p.is_zero()) throw Error("cannot factor the zero polynomial");
    std::vector<std::pair<UniPoly, int>> result;
    for (const auto& [part, mult] : square_free_decomposition(p)) {
        UniPoly rest = part.primitive();
        for (const auto& r : rational_roots(rest)) {
            const UniPoly lin = UniPoly{-r, Rational(1)}.primitive();
            result.emplace_back(lin, mult);
            rest = exact_div(rest, lin).primitive();
        }
        if (rest.degree() >= 1) {
            std::vector<UniPoly> pieces;
            factor_rootless(rest, pieces);
            for (auto& f : pieces) result.emplace_back(f.primitive(), mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        const auto& cx = x.first.coeffs();
        const auto& cy = y.first.coeffs();
        return std::lexicographical_compare(cx.rbegin(), cx.rend(), cy.rbegin(), cy.rend());
    });
    return result;
}

}  // namespace refdyn
