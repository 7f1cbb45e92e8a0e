#include "refdyn/germs.hpp"

#include <algorithm>
#include <limits>

namespace refdyn {

namespace {

constexpr int kVars = 6;

std::vector<IndexPair> support_pairs(const MonomialSupport& support) {
    std::vector<IndexPair> out;
    for (const auto& e : support) {
        std::vector<int> idx;
        for (int i = 0; i < kVars; ++i) {
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) idx.push_back(i);
        }
        out.emplace_back(idx[0], idx[1]);
    }
    return out;
}

}  // namespace

bool dominance_holds(const ValuationVector& v) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 3; j < 6; ++j) {
            if (v.d[static_cast<std::size_t>(i)] < v.d[static_cast<std::size_t>(j)]) return false;
        }
    }
    return true;
}

IndexPair predicted_pair(int phase) {
    switch (((phase % 3) + 3) % 3) {
        case 0: return {3, 4};
        case 1: return {3, 5};
        default: return {4, 5};
    }
}

StepResult valuation_step(const ValuationVector& d, const TransitionSystem& sys) {
    if (sys.dimension() != kVars || sys.period() != 3) throw Error("valuation steps need a period-3 system in dimension 6");
    if (!dominance_holds(d)) throw Error("dominance invariant fails on the input valuations");
    const int l = ((d.phase % 3) + 3) % 3;
    const auto& dv = d.d;
    auto at = [&](int i) -> const Integer& { return dv[static_cast<std::size_t>(i)]; };

    StepResult out;
    out.predicted = predicted_pair(l);
    const auto pairs = support_pairs(monomial_supports()[static_cast<std::size_t>(l)]);
    Integer best;
    bool first = true;
    for (const auto& [mu, nu] : pairs) {
        const Integer s = at(mu) + at(nu);
        if (first || s < best) {
            best = s;
            out.minimizers.clear();
            first = false;
        }
        if (s == best) out.minimizers.emplace_back(mu, nu);
    }
    out.pair_match = std::find(out.minimizers.begin(), out.minimizers.end(), out.predicted) != out.minimizers.end();

    std::array<Integer, 6> raw;
    for (int i = 0; i < kVars; ++i) raw[static_cast<std::size_t>(i)] = i == 5 - l ? best : Integer(at(l) + at(i));
    const Integer m = *std::min_element(raw.begin(), raw.end());
    for (auto& x : raw) x -= m;
    out.next = {raw, (l + 1) % 3};

    const RatMatrix& mat = sys.matrix(l);
    out.matrix_match = true;
    for (int i = 0; i < kVars; ++i) {
        Rational acc;
        for (int j = 0; j < kVars; ++j) acc += mat(i, j) * Rational(at(j));
        if (!(acc == Rational(raw[static_cast<std::size_t>(i)]))) out.matrix_match = false;
    }
    return out;
}

StepResult valuation_step(const ValuationVector& d) { return valuation_step(d, triangle_system()); }

PairReport verify_minimal_pairs(int steps, const TransitionSystem& sys) {
    if (steps < 1) throw Error("steps must be at least 1");
    PairReport rep;
    ValuationVector cur = ValuationVector::transverse();
    for (int k = 1; k <= steps; ++k) {
        const StepResult r = valuation_step(cur, sys);
        PairReportRow row{k, cur, r.next, r.minimizers, r.predicted, r.pair_match && r.matrix_match};
        rep.rows.push_back(row);
        if (!row.match) {
            rep.first_mismatch = k;
            break;
        }
        cur = r.next;
    }
    return rep;
}

PairReport verify_minimal_pairs(int steps) { return verify_minimal_pairs(steps, triangle_system()); }

namespace {

nlohmann::json integers_json(const std::vector<Integer>& v) {
    auto j = nlohmann::json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p()) {
            j.push_back(x.get_si());
        } else {
            j.push_back(x.get_str());
        }
    }
    return j;
}

nlohmann::json pair_json(const IndexPair& p) { return nlohmann::json::array({p.first, p.second}); }

}  // namespace

nlohmann::json to_json(const PairReport& rep) {
    auto rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        auto mins = nlohmann::json::array();
        for (const auto& p : r.minimizers) mins.push_back(pair_json(p));
        rows.push_back({{"step", r.step},
                        {"phase", r.before.phase},
                        {"valuations", integers_json(r.before.as_vector())},
                        {"next_valuations", integers_json(r.after.as_vector())},
                        {"minimal_pair", r.minimizers.size() == 1 ? pair_json(r.minimizers.front()) : nlohmann::json(mins)},
                        {"minimizers", mins},
                        {"predicted_pair", pair_json(r.predicted)},
                        {"match", r.match}});
    }
    nlohmann::json j{{"steps", rows}, {"all_match", rep.all_match()}};
    j["first_mismatch"] = rep.first_mismatch ? nlohmann::json(*rep.first_mismatch) : nlohmann::json(nullptr);
    return j;
}

CurveTrait::CurveTrait(std::array<TruncatedSeries, 6> series) : series_(std::move(series)) {
    const int order = series_.front().order();
    for (std::size_t i = 0; i < series_.size(); ++i) {
        if (series_[i].order() != order) throw Error("trait series must share one truncation order");
        vals_.d[i] = valuation(series_[i]);
    }
    const Integer m = *std::min_element(vals_.d.begin(), vals_.d.end());
    if (m != 0) throw Error("trait must have a component not vanishing at t = 0");
}

CurveTrait CurveTrait::random_transverse(Rng& rng, int order, long bound) {
    if (order < 2) throw Error("trait order must be at least 2");
    std::array<TruncatedSeries, 6> s;
    for (int i = 0; i < kVars; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(order));
        const int start = i == 0 ? 1 : 0;
        c[static_cast<std::size_t>(start)] = rng.nonzero_rational(bound);
        for (int k = start + 1; k < order; ++k) c[static_cast<std::size_t>(k)] = rng.rational(bound);
        s[static_cast<std::size_t>(i)] = TruncatedSeries(std::move(c), order);
    }
    return CurveTrait(std::move(s));
}

namespace {

// t^shift * unit, with unit[0] != 0 and unit.size() known coefficients.
template <typename C>
struct RelSeries {
    std::int64_t shift = 0;
    std::vector<C> unit;
};

template <typename C>
std::vector<C> mul_trunc(const std::vector<C>& a, const std::vector<C>& b, std::size_t n) {
    std::vector<C> v(n);
    for (std::size_t i = 0; i < n && i < a.size(); ++i) {
        if (coeff_is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) v[i + j] += a[i] * b[j];
    }
    return v;
}

template <typename C>
RelSeries<C> mul(const RelSeries<C>& a, const RelSeries<C>& b) {
    const std::size_t n = std::min(a.unit.size(), b.unit.size());
    return {a.shift + b.shift, mul_trunc(a.unit, b.unit, n)};
}

template <typename C>
struct QuadTerm {
    C coeff;
    int mu;
    int nu;
};

template <typename C>
C convert(const Rational& r);
template <>
ModP convert<ModP>(const Rational& r) { return ModP::from_rational(r); }
template <>
Rational convert<Rational>(const Rational& r) { return r; }

template <typename C>
C draw(Rng& rng);
template <>
ModP draw<ModP>(Rng& rng) { return ModP(rng.next()); }
template <>
Rational draw<Rational>(Rng& rng) { return rng.rational(9); }

template <typename C>
std::vector<QuadTerm<C>> quad_terms(const MultiPoly& q) {
    std::vector<QuadTerm<C>> out;
    for (const auto& [e, c] : q.terms()) {
        std::vector<int> idx;
        for (int i = 0; i < kVars; ++i) {
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) idx.push_back(i);
        }
        out.push_back({convert<C>(c), idx[0], idx[1]});
    }
    return out;
}

template <typename C>
RelSeries<C> eval_quadric(const std::vector<QuadTerm<C>>& terms, const std::array<RelSeries<C>, 6>& f, int step) {
    std::int64_t m = std::numeric_limits<std::int64_t>::max();
    for (const auto& t : terms) m = std::min(m, f[t.mu].shift + f[t.nu].shift);
    // Absolute number of known coefficients of Q(f) / t^m.
    std::int64_t known = std::numeric_limits<std::int64_t>::max();
    for (const auto& t : terms) {
        const std::int64_t off = f[t.mu].shift + f[t.nu].shift - m;
        known = std::min<std::int64_t>(known, off + static_cast<std::int64_t>(std::min(f[t.mu].unit.size(), f[t.nu].unit.size())));
    }
    std::vector<C> sum(static_cast<std::size_t>(known));
    for (const auto& t : terms) {
        const std::int64_t off = f[t.mu].shift + f[t.nu].shift - m;
        if (off >= known) continue;
        const auto prod = mul_trunc(f[t.mu].unit, f[t.nu].unit, static_cast<std::size_t>(known - off));
        for (std::size_t j = 0; j < prod.size(); ++j) sum[static_cast<std::size_t>(off) + j] += t.coeff * prod[j];
    }
    std::size_t v = 0;
    while (v < sum.size() && coeff_is_zero(sum[v])) ++v;
    if (v == sum.size()) {
        throw Error("truncation exhausted at step " + std::to_string(step) + ": all " + std::to_string(known) +
                    " known coefficients of the quadric cancel");
    }
    return {m + static_cast<std::int64_t>(v), std::vector<C>(sum.begin() + static_cast<std::ptrdiff_t>(v), sum.end())};
}

template <typename C>
std::vector<EvolveStep> evolve(const CurveTrait& trait, int steps, const TriangleChart& chart, const EvolveOptions& opt) {
    Rng rng(opt.seed);
    std::array<RelSeries<C>, 6> f;
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& s = trait.series()[i];
        const int v = valuation(s);
        f[i].shift = v;
        for (int k = v; k < s.order(); ++k) f[i].unit.push_back(convert<C>(s.coeff(k)));
        if (coeff_is_zero(f[i].unit.front())) throw Error("leading coefficient vanishes in the chosen arithmetic");
    }
    const int order = trait.order();
    std::array<std::vector<QuadTerm<C>>, 3> quads;
    for (int l = 0; l < 3; ++l) quads[static_cast<std::size_t>(l)] = quad_terms<C>(chart.quadric(l));

    ValuationVector cur = trait.valuations();
    std::vector<EvolveStep> out;
    for (int k = 1; k <= steps; ++k) {
        const int l = cur.phase;
        std::array<RelSeries<C>, 6> g;
        for (int i = 0; i < 6; ++i) {
            g[static_cast<std::size_t>(i)] = i == 5 - l ? eval_quadric(quads[static_cast<std::size_t>(l)], f, k)
                                                        : mul(f[static_cast<std::size_t>(l)], f[static_cast<std::size_t>(i)]);
        }
        std::int64_t m = g[0].shift;
        for (const auto& s : g) m = std::min(m, s.shift);
        for (auto& s : g) s.shift -= m;

        ValuationVector observed;
        observed.phase = (l + 1) % 3;
        int precision = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < 6; ++i) {
            observed.d[i] = Integer(static_cast<long>(g[i].shift));
            precision = std::min(precision, static_cast<int>(g[i].unit.size()));
        }
        const StepResult predicted = valuation_step(cur);
        if (!(observed == predicted.next)) {
            throw Error("observed valuations differ from the min-plus prediction at step " + std::to_string(k));
        }
        out.push_back({k, observed, predicted.next, precision});

        if (opt.guard > 0) {
            for (auto& s : g) {
                const std::size_t keep = std::min(s.unit.size(), static_cast<std::size_t>(opt.guard));
                s.unit.resize(keep);
                while (static_cast<int>(s.unit.size()) < order) s.unit.push_back(draw<C>(rng));
            }
        }
        f = std::move(g);
        cur = observed;
    }
    return out;
}

}  // namespace

std::vector<EvolveStep> series_evolve(const CurveTrait& trait, int steps, const TriangleChart& chart,
                                      const EvolveOptions& options) {
    if (steps < 1) throw Error("steps must be at least 1");
    if (!dominance_holds(trait.valuations())) throw Error("trait valuations violate the dominance invariant");
    if (options.arithmetic == SeriesArithmetic::modp) return evolve<ModP>(trait, steps, chart, options);
    return evolve<Rational>(trait, steps, chart, options);
}

}  // namespace refdyn
