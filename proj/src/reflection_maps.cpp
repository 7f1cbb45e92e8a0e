#include "refdyn/reflection_maps.hpp"

namespace refdyn {

namespace {

constexpr int kVars = 6;

MultiPoly var(int i) { return MultiPoly::variable(kVars, i); }

Exponent quad_exp(int a, int b) {
    Exponent e(kVars, 0);
    ++e[static_cast<std::size_t>(a)];
    ++e[static_cast<std::size_t>(b)];
    return e;
}

// All monomials of degree d in x_1..x_5.
void monomials_from_1(int d, int start, Exponent& cur, std::vector<Exponent>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < kVars; ++i) {
        ++cur[static_cast<std::size_t>(i)];
        monomials_from_1(d - 1, i, cur, out);
        --cur[static_cast<std::size_t>(i)];
    }
}

}  // namespace

AdaptedCubic::AdaptedCubic(MultiPoly q, MultiPoly c) : q_(std::move(q)), c_(std::move(c)) {
    if (q_.nvars() != kVars || c_.nvars() != kVars) throw Error("adapted cubic lives in six variables");
    const int x0[] = {0};
    if (!q_.avoids(x0) || !c_.avoids(x0)) throw Error("q and c must not involve X_0");
    if (!q_.is_homogeneous(2) || !c_.is_homogeneous(3)) throw Error("q must be a quadric and c a cubic form");
}

AdaptedCubic AdaptedCubic::random(Rng& rng, long bound) {
    MultiPoly q(kVars), c(kVars);
    std::vector<Exponent> mq, mc;
    Exponent cur(kVars, 0);
    monomials_from_1(2, 1, cur, mq);
    monomials_from_1(3, 1, cur, mc);
    for (const auto& e : mq) q.add_term(e, rng.rational(bound));
    for (const auto& e : mc) c.add_term(e, rng.rational(bound));
    return {q, c};
}

MultiPoly AdaptedCubic::form() const {
    const MultiPoly x0 = var(0);
    return var(1) * x0 * x0 + x0 * q_ + c_;
}

nlohmann::json to_json(const AdaptedCubic& ac) { return {{"q", to_json(ac.q())}, {"c", to_json(ac.c())}}; }

AdaptedCubic adapted_cubic_from_json(const nlohmann::json& j) {
    return {multipoly_from_json(j.at("q")), multipoly_from_json(j.at("c"))};
}

ProjectiveMap::ProjectiveMap(std::vector<MultiPoly> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw Error("projective map needs components");
    const int n = comps_.front().nvars();
    int d = -1;
    bool all_zero = true;
    for (const auto& f : comps_) {
        if (f.nvars() != n) throw Error("components disagree on variable count");
        if (f.is_zero()) continue;
        all_zero = false;
        if (d < 0) d = f.degree();
        if (!f.is_homogeneous(d)) throw Error("components must be homogeneous of one degree");
    }
    if (all_zero) throw Error("all components vanish");
}

int ProjectiveMap::degree() const {
    for (const auto& f : comps_) {
        if (!f.is_zero()) return f.degree();
    }
    return -1;
}

ProjectiveMap ProjectiveMap::content_removed() const {
    Exponent g;
    for (const auto& f : comps_) {
        if (f.is_zero()) continue;
        const Exponent m = f.monomial_content();
        if (g.empty()) {
            g = m;
        } else {
            for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
        }
    }
    std::vector<MultiPoly> out;
    Rational scale;
    for (const auto& f : comps_) {
        MultiPoly h = f.divide_monomial(g);
        if (scale.is_zero() && !h.is_zero()) scale = Rational(1) / h.terms().begin()->second;
        out.push_back(std::move(h));
    }
    for (auto& h : out) h *= scale;
    return ProjectiveMap(std::move(out));
}

ProjectiveMap ProjectiveMap::compose(const ProjectiveMap& inner) const {
    if (static_cast<int>(inner.comps_.size()) != nvars()) throw Error("composition arity mismatch");
    std::vector<MultiPoly> out;
    for (const auto& f : comps_) out.push_back(f.substitute(inner.comps_));
    return ProjectiveMap(std::move(out));
}

std::vector<Rational> ProjectiveMap::evaluate(std::span<const Rational> point) const {
    std::vector<Rational> out;
    for (const auto& f : comps_) out.push_back(f.evaluate(point));
    return out;
}

bool ProjectiveMap::projectively_equal(const ProjectiveMap& other) const {
    if (comps_.size() != other.comps_.size() || nvars() != other.nvars()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        for (std::size_t j = i + 1; j < comps_.size(); ++j) {
            if (!(comps_[i] * other.comps_[j] == comps_[j] * other.comps_[i])) return false;
        }
    }
    return true;
}

ProjectiveMap single_reflection_formula(const AdaptedCubic& ac) {
    const MultiPoly x1 = var(1);
    std::vector<MultiPoly> comps{var(0) * x1 + ac.q()};
    for (int i = 1; i < kVars; ++i) comps.push_back(-(x1 * var(i)));
    return ProjectiveMap(std::move(comps));
}

bool verify_preserves_cubic(const AdaptedCubic& ac, const ProjectiveMap& sigma) {
    const MultiPoly f = ac.form();
    const MultiPoly x1 = var(1);
    return f.substitute(sigma.components()) == -(x1 * x1 * x1) * f;
}

bool verify_preserves_cubic(const AdaptedCubic& ac) { return verify_preserves_cubic(ac, single_reflection_formula(ac)); }

bool verify_involution(const ProjectiveMap& sigma) {
    if (sigma.nvars() != kVars || sigma.components().size() != kVars) return false;
    const ProjectiveMap twice = sigma.compose(sigma);
    const MultiPoly scale = -(var(1) * var(1) * var(1));
    for (int i = 0; i < kVars; ++i) {
        if (!(twice.components()[static_cast<std::size_t>(i)] == scale * var(i))) return false;
    }
    return true;
}

bool verify_involution(const AdaptedCubic& ac) { return verify_involution(single_reflection_formula(ac)); }

std::array<MonomialSupport, 3> monomial_supports() {
    // M_l = (x_0, x_1, x_2) * (x_0, x_1, x_2, the two of x_3, x_4, x_5 other
    // than x_{5-l}) plus two extra cross terms.
    const std::array<std::array<int, 2>, 3> outer{{{3, 4}, {3, 5}, {4, 5}}};
    const std::array<std::array<std::array<int, 2>, 2>, 3> extra{{
        {{{3, 4}, {0, 5}}},
        {{{3, 5}, {1, 4}}},
        {{{4, 5}, {2, 3}}},
    }};
    std::array<MonomialSupport, 3> out;
    for (std::size_t l = 0; l < 3; ++l) {
        std::vector<int> right{0, 1, 2, outer[l][0], outer[l][1]};
        for (int a = 0; a < 3; ++a) {
            for (int b : right) out[l].insert(quad_exp(a, b));
        }
        for (const auto& e : extra[l]) out[l].insert(quad_exp(e[0], e[1]));
    }
    return out;
}

bool in_support(const MultiPoly& f, const MonomialSupport& support) {
    for (const auto& [e, c] : f.terms()) {
        if (!support.contains(e)) return false;
    }
    return true;
}

TriangleChart::TriangleChart(MultiPoly q0, MultiPoly q1, MultiPoly q2) : qs_{std::move(q0), std::move(q1), std::move(q2)} {
    const auto supports = monomial_supports();
    for (std::size_t l = 0; l < 3; ++l) {
        if (qs_[l].nvars() != kVars) throw Error("chart quadrics live in six variables");
        if (!in_support(qs_[l], supports[l])) {
            throw Error("Q_" + std::to_string(l) + " has a monomial outside M_" + std::to_string(l));
        }
    }
}

TriangleChart TriangleChart::random(Rng& rng, long bound) {
    const auto supports = monomial_supports();
    std::array<MultiPoly, 3> qs{MultiPoly(kVars), MultiPoly(kVars), MultiPoly(kVars)};
    for (std::size_t l = 0; l < 3; ++l) {
        for (const auto& e : supports[l]) qs[l].add_term(e, rng.nonzero_rational(bound));
    }
    return {qs[0], qs[1], qs[2]};
}

nlohmann::json to_json(const TriangleChart& chart) {
    return {{"Q0", to_json(chart.quadric(0))}, {"Q1", to_json(chart.quadric(1))}, {"Q2", to_json(chart.quadric(2))}};
}

TriangleChart triangle_chart_from_json(const nlohmann::json& j) {
    return {multipoly_from_json(j.at("Q0")), multipoly_from_json(j.at("Q1")), multipoly_from_json(j.at("Q2"))};
}

std::array<ProjectiveMap, 3> triangle_formulas(const TriangleChart& chart) {
    std::vector<ProjectiveMap> maps;
    for (int l = 0; l < 3; ++l) {
        // sigma_{p_l} multiplies every coordinate by x_l except x_{5-l},
        // which is replaced by Q_l.
        std::vector<MultiPoly> comps;
        for (int i = 0; i < kVars; ++i) comps.push_back(i == 5 - l ? chart.quadric(l) : var(l) * var(i));
        maps.emplace_back(std::move(comps));
    }
    return {maps[0], maps[1], maps[2]};
}

PlaneCheck check_triangle_planes(const std::array<ProjectiveMap, 3>& maps) {
    PlaneCheck out{true, true};
    for (int l = 0; l < 3; ++l) {
        const auto& comps = maps[static_cast<std::size_t>(l)].components();
        for (int i = 0; i < 3; ++i) {
            MultiPoly on_literal = comps[static_cast<std::size_t>(i)];
            MultiPoly on_triangle = comps[static_cast<std::size_t>(i)];
            for (int k = 3; k < 6; ++k) on_literal = on_literal.specialize(k, Rational(0));
            for (int k = 0; k < 3; ++k) on_triangle = on_triangle.specialize(k, Rational(0));
            if (!(on_literal == var(l) * var(i))) out.first_three_are_products = false;
            if (!on_triangle.is_zero()) out.triangle_plane_invariant = false;
        }
    }
    return out;
}

}  // namespace refdyn
