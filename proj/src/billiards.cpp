#include "refdyn/billiards.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace refdyn {

namespace {

constexpr int kVars = 4;

using Param = std::pair<Rational, Rational>;

MultiPoly var(int i) { return MultiPoly::variable(kVars, i); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<Rational> combine(const Rational& s, const std::vector<Rational>& x, const Rational& t,
                              const std::vector<Rational>& y) {
    std::vector<Rational> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] + t * y[i];
    return out;
}

int mod3(int k) { return ((k % 3) + 3) % 3; }

char letter(int k) { return "pqr"[mod3(k)]; }

const RationalPoint& center_point(const Configuration& cfg, char c) {
    switch (c) {
        case 'p': return cfg.p;
        case 'q': return cfg.q;
        case 'r': return cfg.r;
        default: throw Error(std::string("unknown reflection center '") + c + "'");
    }
}

// sigma_hi ... sigma_lo as a composition string (sigma_lo acts first).
std::string word_between(int hi, int lo) {
    std::string w;
    for (int k = hi; k >= lo; --k) w.push_back(letter(k));
    return w;
}

}  // namespace

CubicHypersurface::CubicHypersurface(MultiPoly form) : form_(std::move(form)) {
    if (form_.is_zero()) throw Error("cubic form is zero");
    if (!form_.is_homogeneous(3)) throw Error("form is not a homogeneous cubic");
    for (int i = 0; i < form_.nvars(); ++i) partials_.push_back(form_.derivative(i));
}

std::vector<Rational> CubicHypersurface::gradient(std::span<const Rational> x) const {
    std::vector<Rational> g;
    for (const auto& d : partials_) g.push_back(d.evaluate(x));
    return g;
}

RationalPoint::RationalPoint(std::vector<Rational> coords) : c_(std::move(coords)) {
    auto it = std::find_if(c_.begin(), c_.end(), [](const Rational& x) { return !x.is_zero(); });
    if (it == c_.end()) throw Error("projective point with all coordinates zero");
    const Rational lead = *it;
    for (auto& x : c_) x /= lead;
}

std::string RationalPoint::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].to_string();
    os << ")";
    return os.str();
}

nlohmann::json to_json(const RationalPoint& p) {
    auto j = nlohmann::json::array();
    for (const auto& x : p.coords()) j.push_back(x.to_string());
    return j;
}

RationalPoint rational_point_from_json(const nlohmann::json& j) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<long>()));
    return RationalPoint(std::move(c));
}

RationalPoint parse_rational_point(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == '(' || ch == ')' || ch == ' '; }), s.end());
    std::vector<Rational> c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(Rational::parse(item));
    return RationalPoint(std::move(c));
}

RationalPoint third_intersection(const CubicHypersurface& x, const RationalPoint& p, const RationalPoint& y) {
    if (p.size() != x.nvars() || y.size() != x.nvars()) throw Error("point dimension does not match the hypersurface");
    if (p == y) throw Error("third intersection needs two distinct points");
    if (!x.evaluate(p.coords()).is_zero() || !x.evaluate(y.coords()).is_zero()) {
        throw Error("input point is off the hypersurface");
    }
    const Rational alpha = dot(x.gradient(y.coords()), p.coords());
    const Rational beta = dot(x.gradient(p.coords()), y.coords());
    if (alpha.is_zero() && beta.is_zero()) throw Error("the line through the two points lies on the hypersurface");
    RationalPoint z(combine(beta, y.coords(), -alpha, p.coords()));
    if (!x.evaluate(z.coords()).is_zero()) throw Error("third intersection left the hypersurface");
    return z;
}

bool Configuration::on_line(const RationalPoint& x) const {
    return x.coords()[3].is_zero() && line_form.evaluate(x.coords()).is_zero();
}

bool Configuration::on_conic(const RationalPoint& x) const {
    return x.coords()[3].is_zero() && conic_form.evaluate(x.coords()).is_zero();
}

std::pair<Rational, Rational> Configuration::line_params(const RationalPoint& x) const {
    const auto& uc = u.coords();
    const auto& vc = v.coords();
    const auto& xc = x.coords();
    for (int i = 0; i < kVars; ++i) {
        for (int j = i + 1; j < kVars; ++j) {
            const Rational det = uc[i] * vc[j] - uc[j] * vc[i];
            if (det.is_zero()) continue;
            const Rational s = (xc[i] * vc[j] - xc[j] * vc[i]) / det;
            const Rational t = (uc[i] * xc[j] - uc[j] * xc[i]) / det;
            if (combine(s, uc, t, vc) != xc) throw Error("point " + x.to_string() + " is not on L");
            return {s, t};
        }
    }
    throw Error("spanning points of L coincide");
}

RationalPoint Configuration::line_point(const Rational& s, const Rational& t) const {
    return RationalPoint(combine(s, u.coords(), t, v.coords()));
}

void Configuration::validate() const {
    const int x3[] = {3};
    if (line_form.nvars() != kVars || conic_form.nvars() != kVars || quadric.nvars() != kVars) {
        throw Error("configuration forms live in four variables");
    }
    if (!line_form.is_homogeneous(1) || line_form.is_zero() || !line_form.avoids(x3)) {
        throw Error("line form must be a nonzero linear form in x0, x1, x2");
    }
    if (!conic_form.is_homogeneous(2) || conic_form.is_zero() || !conic_form.avoids(x3)) {
        throw Error("conic form must be a nonzero quadric in x0, x1, x2");
    }
    if (!quadric.is_homogeneous(2)) throw Error("Q must be a quadric");
    if (!(surface.form() == line_form * conic_form + var(3) * quadric)) throw Error("surface is not l c + x3 Q");
    for (const auto* pt : {&u, &v, &p, &q, &r, &a, &b}) {
        if (pt->size() != kVars) throw Error("configuration points live in P^3");
    }
    if (u == v || !on_line(u) || !on_line(v)) throw Error("u and v must be distinct points of L");
    if (!on_line(p) || !on_line(q)) throw Error("p and q must lie on L");
    if (!on_conic(r) || on_line(r)) throw Error("r must lie on C and off L");
    if (a == b || !on_line(a) || !on_line(b) || !on_conic(a) || !on_conic(b)) {
        throw Error("a and b must be two distinct points of L and C");
    }
    for (const auto* x : {&p, &q, &r}) {
        if (*x == a || *x == b) throw Error("p, q and r must differ from a and b");
    }
    // C restricted to L is a binary quadric vanishing at a and b; it must not
    // vanish identically.
    if (conic_form.evaluate(line_point(1, 1).coords()).is_zero() && conic_form.evaluate(u.coords()).is_zero() &&
        conic_form.evaluate(v.coords()).is_zero()) {
        throw Error("L lies in C");
    }
    std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m[i][j] = conic_form.derivative(i).derivative(j).evaluate(std::vector<Rational>(4));
        }
    }
    const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det.is_zero()) throw Error("conic is degenerate");
    for (const auto* x : {&p, &q, &r, &a, &b}) {
        if (all_zero(surface.gradient(x->coords()))) throw Error("K is singular at " + x->to_string());
    }
}

Configuration make_configuration(std::uint64_t seed, MultiPoly line_form, MultiPoly conic_form, MultiPoly quadric,
                                 RationalPoint u, RationalPoint v, RationalPoint p, RationalPoint q,
                                 RationalPoint r, RationalPoint a, RationalPoint b) {
    Configuration cfg;
    cfg.seed = seed;
    cfg.surface = CubicHypersurface(line_form * conic_form + var(3) * quadric);
    cfg.line_form = std::move(line_form);
    cfg.conic_form = std::move(conic_form);
    cfg.quadric = std::move(quadric);
    cfg.u = std::move(u);
    cfg.v = std::move(v);
    cfg.p = std::move(p);
    cfg.q = std::move(q);
    cfg.r = std::move(r);
    cfg.a = std::move(a);
    cfg.b = std::move(b);
    cfg.validate();
    return cfg;
}

namespace {

Configuration draw_configuration(std::uint64_t seed, Rng& rng) {
    const std::array<Rational, 3> l{Rational(rng.nonzero(5)), Rational(rng.nonzero(5)), Rational(rng.nonzero(5))};
    MultiPoly line(kVars);
    for (int i = 0; i < 3; ++i) line += l[static_cast<std::size_t>(i)] * var(i);
    const auto ker = kernel_basis<Rational>({{l[0], l[1], l[2]}}, 3, Rational(0), Rational(1));
    auto lift = [](const std::vector<Rational>& k) { return RationalPoint({k[0], k[1], k[2], Rational(0)}); };
    const RationalPoint u = lift(ker[0]);
    const RationalPoint v = lift(ker[1]);
    auto on_l = [&](long s, long t) { return RationalPoint(combine(Rational(s), u.coords(), Rational(t), v.coords())); };

    std::vector<RationalPoint> pts;
    while (pts.size() < 4) {
        const long s = rng.symmetric(6);
        const long t = rng.symmetric(6);
        if (s == 0 && t == 0) continue;
        const RationalPoint x = on_l(s, t);
        if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    const RationalPoint& a = pts[0];
    const RationalPoint& b = pts[1];

    RationalPoint r;
    for (;;) {
        std::vector<Rational> c{Rational(rng.symmetric(5)), Rational(rng.symmetric(5)), Rational(rng.symmetric(5)),
                                Rational(0)};
        if (all_zero(c) || line.evaluate(c).is_zero()) continue;
        r = RationalPoint(c);
        break;
    }

    std::vector<Exponent> mons;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            Exponent e(kVars, 0);
            ++e[static_cast<std::size_t>(i)];
            ++e[static_cast<std::size_t>(j)];
            mons.push_back(e);
        }
    }
    std::vector<std::vector<Rational>> rows;
    for (const RationalPoint* x : std::initializer_list<const RationalPoint*>{&a, &b, &r}) {
        std::vector<Rational> row;
        for (const auto& e : mons) row.push_back(MultiPoly::monomial(Rational(1), e).evaluate(x->coords()));
        rows.push_back(row);
    }
    const auto cker = kernel_basis<Rational>(rows, static_cast<int>(mons.size()), Rational(0), Rational(1));
    std::vector<Rational> coeffs(mons.size());
    for (const auto& k : cker) {
        const Rational w = rng.nonzero_rational(5);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += w * k[i];
    }
    MultiPoly conic(kVars);
    for (std::size_t i = 0; i < mons.size(); ++i) conic.add_term(mons[i], coeffs[i]);

    MultiPoly quad(kVars);
    for (int i = 0; i < kVars; ++i) {
        for (int j = i; j < kVars; ++j) {
            Exponent e(kVars, 0);
            ++e[static_cast<std::size_t>(i)];
            ++e[static_cast<std::size_t>(j)];
            quad.add_term(e, rng.rational(5));
        }
    }
    return make_configuration(seed, line, conic, quad, u, v, pts[2], pts[3], r, a, b);
}

}  // namespace

Configuration build_configuration(std::uint64_t seed) {
    Rng rng(seed);
    constexpr int kBudget = 100;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        try {
            Configuration cfg = draw_configuration(seed, rng);
            (void)bad_points(cfg);
            return cfg;
        } catch (const Error&) {
        }
    }
    throw Error("resampling budget exhausted for seed " + std::to_string(seed));
}

nlohmann::json to_json(const Configuration& cfg) {
    return {{"seed", cfg.seed},
            {"form", to_json(cfg.surface.form())},
            {"line_form", to_json(cfg.line_form)},
            {"conic_form", to_json(cfg.conic_form)},
            {"quadric", to_json(cfg.quadric)},
            {"L", {to_json(cfg.u), to_json(cfg.v)}},
            {"p", to_json(cfg.p)},
            {"q", to_json(cfg.q)},
            {"r", to_json(cfg.r)},
            {"a", to_json(cfg.a)},
            {"b", to_json(cfg.b)}};
}

Configuration configuration_from_json(const nlohmann::json& j) {
    Configuration cfg = make_configuration(
        j.value("seed", std::uint64_t{0}), multipoly_from_json(j.at("line_form")),
        multipoly_from_json(j.at("conic_form")), multipoly_from_json(j.at("quadric")),
        rational_point_from_json(j.at("L").at(0)), rational_point_from_json(j.at("L").at(1)),
        rational_point_from_json(j.at("p")), rational_point_from_json(j.at("q")), rational_point_from_json(j.at("r")),
        rational_point_from_json(j.at("a")), rational_point_from_json(j.at("b")));
    if (j.contains("form") && !(multipoly_from_json(j.at("form")) == cfg.surface.form())) {
        throw Error("stored form disagrees with l c + x3 Q");
    }
    return cfg;
}

RationalPoint reflect_on_line(const Configuration& cfg, const RationalPoint& x) {
    if (!cfg.on_line(x)) throw Error("point " + x.to_string() + " is not on L");
    const auto g = cfg.surface.gradient(x.coords());
    if (all_zero(g)) throw Error("K is singular at " + x.to_string());
    // A point of T_x K off L.
    std::vector<Rational> w;
    for (const auto& k : kernel_basis<Rational>({g}, kVars, Rational(0), Rational(1))) {
        RatMatrix m = RatMatrix::from_rows({cfg.u.coords(), cfg.v.coords(), k});
        if (m.rank() == 3) {
            w = k;
            break;
        }
    }
    if (w.empty()) throw Error("tangent plane at " + x.to_string() + " is degenerate");
    std::vector<MultiPoly> sub;
    for (int i = 0; i < kVars; ++i) {
        MultiPoly c(3);
        const auto idx = static_cast<std::size_t>(i);
        c += cfg.u.coords()[idx] * MultiPoly::variable(3, 0);
        c += cfg.v.coords()[idx] * MultiPoly::variable(3, 1);
        c += w[idx] * MultiPoly::variable(3, 2);
        sub.push_back(c);
    }
    const MultiPoly plane = cfg.surface.form().substitute(sub);
    MultiPoly residual;
    try {
        residual = plane.divide_monomial({0, 0, 1});
    } catch (const Error&) {
        throw Error("exact division by the form of L failed at " + x.to_string());
    }
    const MultiPoly on_l = residual.specialize(2, Rational(0));
    const Rational qa = on_l.coeff({2, 0, 0});
    const Rational qb = on_l.coeff({1, 1, 0});
    const Rational qc = on_l.coeff({0, 2, 0});
    if (qa.is_zero() && qb.is_zero() && qc.is_zero()) {
        throw Error("L lies in the residual conic at " + x.to_string());
    }
    const auto [s0, t0] = cfg.line_params(x);
    // on_l = (t0 s - s0 t)(alpha s + beta t); the other root is (beta : -alpha).
    Rational alpha, beta;
    if (!t0.is_zero()) {
        alpha = qa / t0;
        beta = (qb + s0 * alpha) / t0;
    } else {
        alpha = -qb / s0;
        beta = -qc / s0;
    }
    if (!(t0 * alpha == qa && t0 * beta - s0 * alpha == qb && -s0 * beta == qc)) {
        throw Error("residual conic does not pass through " + x.to_string());
    }
    return cfg.line_point(beta, -alpha);
}

RationalPoint apply_reflection(const Configuration& cfg, char center, const RationalPoint& x) {
    const RationalPoint& c = center_point(cfg, center);
    if (x == c) throw Error(std::string("indeterminacy: point equals the center of sigma_") + center);
    if (center != 'r' && cfg.on_line(x)) return reflect_on_line(cfg, x);
    return third_intersection(cfg.surface, c, x);
}

RationalPoint apply_word(const Configuration& cfg, const std::string& word, const RationalPoint& x) {
    RationalPoint y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = apply_reflection(cfg, *it, y);
    return y;
}

std::vector<RationalPoint> billiard_orbit(const Configuration& cfg, const RationalPoint& start,
                                          const std::string& word, int steps) {
    if (word.empty()) throw Error("empty reflection word");
    if (steps < 0) throw Error("negative step count");
    std::vector<RationalPoint> out{start};
    const int n = static_cast<int>(word.size());
    for (int k = 0; k < steps; ++k) {
        out.push_back(apply_reflection(cfg, word[static_cast<std::size_t>(n - 1 - k % n)], out.back()));
    }
    return out;
}

MobiusMap::MobiusMap(RatMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 2 || m_.cols() != 2) throw Error("Mobius map needs a 2x2 matrix");
    if ((m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0)).is_zero()) throw Error("Mobius map with zero determinant");
    Rational lead;
    for (int i = 0; i < 4 && lead.is_zero(); ++i) lead = m_(i / 2, i % 2);
    m_ = (Rational(1) / lead) * m_;
}

std::pair<Rational, Rational> MobiusMap::apply(const std::pair<Rational, Rational>& st) const {
    return {m_(0, 0) * st.first + m_(0, 1) * st.second, m_(1, 0) * st.first + m_(1, 1) * st.second};
}

bool same_param(const Param& x, const Param& y) {
    if ((x.first.is_zero() && x.second.is_zero()) || (y.first.is_zero() && y.second.is_zero())) return false;
    return x.first * y.second == x.second * y.first;
}

ReturnMapReport return_map(const Configuration& cfg, const std::string& word) {
    ReturnMapReport rep;
    rep.word = word;
    std::vector<Param> candidates{{Rational(0), Rational(1)}};
    for (long j = 0; j <= 12; ++j) {
        candidates.emplace_back(Rational(1), Rational(j));
        if (j) candidates.emplace_back(Rational(1), Rational(-j));
    }
    for (const auto& c : candidates) {
        if (rep.probes.size() == 6) break;
        const RationalPoint x = cfg.line_point(c.first, c.second);
        if (x == cfg.a || x == cfg.b) continue;
        try {
            const RationalPoint y = apply_word(cfg, word, x);
            if (!cfg.on_line(y)) throw Error("word does not return to L");
            rep.probes.push_back(cfg.line_params(x));
            rep.images.push_back(cfg.line_params(y));
        } catch (const Error& e) {
            if (std::string(e.what()) == "word does not return to L") throw;
            ++rep.skipped;
        }
    }
    if (rep.probes.size() < 4) throw Error("too few probe points survived the orbit computation");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& [s, t] = rep.probes[i];
        const auto& [ys, yt] = rep.images[i];
        // ys (m10 s + m11 t) - yt (m00 s + m01 t) = 0
        rows.push_back({-yt * s, -yt * t, ys * s, ys * t});
    }
    const auto ker = kernel_basis<Rational>(rows, 4, Rational(0), Rational(1));
    if (ker.size() != 1) throw Error("return map is not determined by three probes");
    RatMatrix m(2, 2);
    m(0, 0) = ker[0][0];
    m(0, 1) = ker[0][1];
    m(1, 0) = ker[0][2];
    m(1, 1) = ker[0][3];
    rep.map = MobiusMap(m);
    for (std::size_t i = 3; i < rep.probes.size(); ++i) {
        if (!same_param(rep.map.apply(rep.probes[i]), rep.images[i])) {
            throw Error("return map is not Mobius: certification failed on probe " + std::to_string(i));
        }
    }
    const Param pa = cfg.line_params(cfg.a);
    const Param pb = cfg.line_params(cfg.b);
    rep.fixes_a = apply_word(cfg, word, cfg.a) == cfg.a && same_param(rep.map.apply(pa), pa);
    rep.fixes_b = apply_word(cfg, word, cfg.b) == cfg.b && same_param(rep.map.apply(pb), pb);
    return rep;
}

AttractorReport attractor_analysis(const MobiusMap& m, const Param& a, const Param& b) {
    if (same_param(a, b)) throw Error("map is not diagonalizable in the (a, b) frame: a = b");
    auto eigen = [&](const Param& x, const char* name) {
        const Param y = m.apply(x);
        if (!same_param(x, y)) throw Error(std::string(name) + " is not a fixed point");
        return x.first.is_zero() ? y.second / x.second : y.first / x.first;
    };
    const Rational mu_a = eigen(a, "a");
    const Rational mu_b = eigen(b, "b");
    AttractorReport rep;
    rep.ratio = mu_a / mu_b;
    const Rational mag = abs(rep.ratio);
    if (mag < Rational(1)) {
        rep.attractor = 'b';
    } else if (mag > Rational(1)) {
        rep.attractor = 'a';
    }
    return rep;
}

namespace {

RationalPoint primed_point(const Configuration& cfg, int i) {
    if (i != 2) return reflect_on_line(cfg, i == 0 ? cfg.p : cfg.q);
    // T_r K meets the plane in the tangent line of C at r, which meets L once.
    const auto g = cfg.surface.gradient(cfg.r.coords());
    const Rational gu = dot(g, cfg.u.coords());
    const Rational gv = dot(g, cfg.v.coords());
    if (gu.is_zero() && gv.is_zero()) throw Error("L lies in the tangent plane at r");
    return cfg.line_point(gv, -gu);
}

const RationalPoint& base_point(const Configuration& cfg, int k) {
    switch (mod3(k)) {
        case 0: return cfg.p;
        case 1: return cfg.q;
        default: return cfg.r;
    }
}

}  // namespace

BadPointSet bad_points(const Configuration& cfg) {
    BadPointSet out;
    for (int i = 0; i < 3; ++i) {
        out.primed.push_back(primed_point(cfg, i));
        if (out.primed.back() == base_point(cfg, i)) {
            out.collisions.push_back(std::string("p'_") + std::to_string(i) + " = p_" + std::to_string(i));
        }
        if (out.primed.back() == cfg.a || out.primed.back() == cfg.b) {
            out.collisions.push_back(std::string("p'_") + std::to_string(i) + " lies on C and L");
        }
    }
    auto add = [&](const std::string& label, const std::string& word, const RationalPoint& src) {
        const RationalPoint y = apply_word(cfg, word, src);
        if (!cfg.on_line(y)) throw Error("bad point " + label + " is not on L");
        out.points.push_back({label, y, cfg.line_params(y)});
    };
    add("sigma5..sigma1(p0)", word_between(5, 1), cfg.p);
    add("sigma5..sigma1(p'0)", word_between(5, 1), out.primed[0]);
    add("sigma5..sigma2(p1)", word_between(5, 2), cfg.q);
    add("sigma5..sigma2(p'1)", word_between(5, 2), out.primed[1]);
    add("sigma5..sigma3(p2)", word_between(5, 3), cfg.r);
    add("p'2", "", out.primed[2]);
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        for (std::size_t j = i + 1; j < out.points.size(); ++j) {
            if (out.points[i].point == out.points[j].point) {
                out.collisions.push_back(out.points[i].label + " = " + out.points[j].label);
            }
        }
    }
    return out;
}

namespace {

// Chart value on L with the attractor at 0 and the repeller at infinity;
// nullopt at the repeller.
std::optional<Rational> chart(const Configuration& cfg, char attractor, const RationalPoint& x) {
    const Param pa = cfg.line_params(cfg.a);
    const Param pb = cfg.line_params(cfg.b);
    const Param px = cfg.line_params(x);
    // px = alpha pa + beta pb
    const Rational det = pa.first * pb.second - pa.second * pb.first;
    const Rational alpha = (px.first * pb.second - px.second * pb.first) / det;
    const Rational beta = (pa.first * px.second - pa.second * px.first) / det;
    const Rational& num = attractor == 'b' ? alpha : beta;
    const Rational& den = attractor == 'b' ? beta : alpha;
    if (den.is_zero()) return std::nullopt;
    return num / den;
}

}  // namespace

CheckReport check_configuration(const Configuration& cfg, int horizon) {
    if (horizon < 1) throw Error("horizon must be at least 1");
    CheckReport rep;
    const ReturnMapReport rm = return_map(cfg);
    rep.attractor = attractor_analysis(rm.map, cfg.line_params(cfg.a), cfg.line_params(cfg.b));
    if (!rep.attractor.has_attractor()) {
        rep.status = "no attractor";
        return rep;
    }
    rep.bad = bad_points(cfg);
    const char att = rep.attractor.attractor;
    std::optional<Rational> radius;
    for (const auto& y : rep.bad.points) {
        const auto z = chart(cfg, att, y.point);
        if (!z) continue;
        const Rational m = abs(*z);
        if (!radius || m < *radius) radius = m;
    }
    if (!radius) throw Error("every bad point sits at the repeller");
    rep.safe_radius = *radius;

    bool collision = false;
    bool exhausted = false;
    for (int i = 0; i < 3; ++i) {
        StartReport s;
        s.start = i;
        RationalPoint x = base_point(cfg, i);
        int k = i;
        for (;;) {
            if (x == base_point(cfg, k - 1) || x == rep.bad.primed[static_cast<std::size_t>(mod3(k - 1))]) {
                s.status = "collision at k = " + std::to_string(k);
                collision = true;
                break;
            }
            if (k < i && mod3(k) == 0 && cfg.on_line(x)) {
                const auto z = chart(cfg, att, x);
                if (z && abs(*z) < rep.safe_radius) {
                    s.k0 = k;
                    s.status = "success";
                    break;
                }
            }
            if (s.steps == horizon) {
                s.status = "horizon exhausted";
                exhausted = true;
                break;
            }
            x = apply_reflection(cfg, letter(k - 1), x);
            --k;
            ++s.steps;
        }
        rep.starts.push_back(s);
    }
    rep.status = collision ? "rejected" : (exhausted ? "inconclusive" : "success");
    return rep;
}

nlohmann::json to_json(const CheckReport& rep, int precision) {
    auto starts = nlohmann::json::array();
    for (const auto& s : rep.starts) {
        starts.push_back({{"start", s.start},
                          {"k0", s.k0 ? nlohmann::json(*s.k0) : nlohmann::json(nullptr)},
                          {"k0_mod_3", s.k0 ? nlohmann::json(mod3(*s.k0)) : nlohmann::json(nullptr)},
                          {"steps", s.steps},
                          {"status", s.status}});
    }
    auto bad = nlohmann::json::array();
    for (const auto& b : rep.bad.points) {
        bad.push_back({{"label", b.label},
                       {"point", to_json(b.point)},
                       {"param", {b.params.first.to_string(), b.params.second.to_string()}}});
    }
    nlohmann::json j{{"status", rep.status},
                     {"chart", "attractor at 0, repeller at infinity"},
                     {"eigenvalue_ratio", rep.attractor.ratio.to_string()},
                     {"eigenvalue_ratio_decimal", rep.attractor.ratio.to_decimal(precision)},
                     {"attractor", rep.attractor.attractor ? std::string(1, rep.attractor.attractor) : std::string()},
                     {"safe_radius", rep.safe_radius.to_string()},
                     {"safe_radius_decimal", rep.safe_radius.to_decimal(precision)},
                     {"bad_points", bad},
                     {"collisions", rep.bad.collisions},
                     {"starts", starts}};
    return j;
}

unsigned worker_count() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("REFDYN_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
        }
    }
    return n;
}

SearchResult search_configuration(std::uint64_t first, std::uint64_t last, int horizon) {
    if (last < first) throw Error("empty seed range");
    const unsigned workers = worker_count();
    const std::uint64_t batch = 4ULL * workers;
    SearchResult out;
    for (std::uint64_t lo = first; lo <= last; lo += batch) {
        const std::uint64_t hi = std::min(last, lo + batch - 1);
        const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
        std::vector<std::optional<CheckReport>> results(n);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    const Configuration cfg = build_configuration(lo + i);
                    CheckReport rep = check_configuration(cfg, horizon);
                    if (rep.passed()) results[i] = std::move(rep);
                } catch (const Error&) {
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w + 1 < std::min<std::size_t>(workers, n); ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        for (std::size_t i = 0; i < n; ++i) {
            if (results[i]) {
                out.seed = lo + i;
                out.tried = lo + i - first + 1;
                out.report = std::move(results[i]);
                return out;
            }
        }
        if (hi == last) break;
    }
    out.tried = last - first + 1;
    return out;
}

}  // namespace refdyn
