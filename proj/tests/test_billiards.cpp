#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "refdyn/billiards.hpp"

using namespace refdyn;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

RationalPoint pt(std::vector<long> c) {
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return RationalPoint(std::move(r));
}

Exponent mono(int a, int b, int c) {
    Exponent e(4, 0);
    ++e[static_cast<std::size_t>(a)];
    ++e[static_cast<std::size_t>(b)];
    ++e[static_cast<std::size_t>(c)];
    return e;
}

}  // namespace

TEST_CASE("rational points") {
    const RationalPoint p = pt({0, 2, -4, 6});
    CHECK(p == RationalPoint({Rational(0), Rational(1), Rational(-2), Rational(3)}));
    CHECK(p.to_string() == "(0, 1, -2, 3)");
    CHECK(parse_rational_point("(0, 1/2, -1, 3/2)") == p);
    CHECK(rational_point_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(pt({0, 0, 0}), Error);
}

TEST_CASE("third intersection on the Fermat cubic") {
    const MultiPoly f = pow(x(4, 0), 3) + pow(x(4, 1), 3) + pow(x(4, 2), 3) + pow(x(4, 3), 3);
    const CubicHypersurface fermat(f);
    // F(s y + t p) = 3 s t (s + t), so z = 3 y - 3 p.
    const RationalPoint z = third_intersection(fermat, pt({1, -1, 0, 0}), pt({1, 0, -1, 0}));
    CHECK(z == pt({0, 1, -1, 0}));
    CHECK(fermat.evaluate(z.coords()).is_zero());
    // This line lies on the surface.
    CHECK_THROWS_AS(third_intersection(fermat, pt({1, -1, 0, 0}), pt({0, 0, 1, -1})), Error);
    CHECK_THROWS_AS(third_intersection(fermat, pt({1, -1, 0, 0}), pt({1, -1, 0, 0})), Error);
    CHECK_THROWS_AS(third_intersection(fermat, pt({1, -1, 0, 0}), pt({1, 0, 0, 0})), Error);
    CHECK_THROWS_AS(CubicHypersurface(x(4, 0) * x(4, 1)), Error);
}

TEST_CASE("tangent line returns the point of tangency") {
    // y^2 z = x^3 - x z^2; the tangent at (1:0:1) is x = z and meets the curve again at (0:1:0).
    const MultiPoly f = x(3, 1) * x(3, 1) * x(3, 2) - pow(x(3, 0), 3) + x(3, 0) * x(3, 2) * x(3, 2);
    const CubicHypersurface curve(f);
    CHECK(third_intersection(curve, pt({0, 1, 0}), pt({1, 0, 1})) == pt({1, 0, 1}));
    CHECK(third_intersection(curve, pt({1, 0, 1}), pt({0, 1, 0})) == pt({1, 0, 1}));
}

TEST_CASE("third intersection is an involution on random cubics") {
    Rng rng(77);
    int checked = 0;
    while (checked < 100) {
        MultiPoly g(4);
        for (int i = 0; i < 4; ++i) {
            for (int j = i; j < 4; ++j) {
                for (int k = j; k < 4; ++k) g.add_term(mono(i, j, k), rng.rational(5));
            }
        }
        std::vector<Rational> pc, yc;
        for (int i = 0; i < 4; ++i) {
            pc.emplace_back(rng.symmetric(4));
            yc.emplace_back(rng.symmetric(4));
        }
        // Add l m1 + m m2 so that both points lie on the surface.
        const MultiPoly m1 = MultiPoly::monomial(Rational(1), mono(0, 0, 1));
        const MultiPoly m2 = MultiPoly::monomial(Rational(1), mono(2, 3, 3));
        const Rational a11 = m1.evaluate(pc), a12 = m2.evaluate(pc), a21 = m1.evaluate(yc), a22 = m2.evaluate(yc);
        const Rational det = a11 * a22 - a12 * a21;
        if (det.is_zero()) continue;
        const Rational r1 = -g.evaluate(pc), r2 = -g.evaluate(yc);
        const Rational lam = (r1 * a22 - a12 * r2) / det;
        const Rational mu = (a11 * r2 - a21 * r1) / det;
        const MultiPoly f = g + lam * m1 + mu * m2;
        if (f.is_zero()) continue;
        try {
            const CubicHypersurface surf(f);
            const RationalPoint p(pc), y(yc);
            const RationalPoint z = third_intersection(surf, p, y);
            if (z == p || z == y) continue;
            CHECK(surf.evaluate(z.coords()).is_zero());
            CHECK(third_intersection(surf, p, z) == y);
            CHECK(third_intersection(surf, y, p) == z);
            ++checked;
        } catch (const Error&) {
        }
    }
    CHECK(checked == 100);
}

TEST_CASE("configurations") {
    const Configuration cfg = build_configuration(7);
    CHECK(to_json(cfg) == to_json(build_configuration(7)));
    CHECK(to_json(cfg) != to_json(build_configuration(8)));
    CHECK(cfg.surface.form().specialize(3, Rational(0)) == cfg.line_form * cfg.conic_form);
    CHECK(cfg.on_line(cfg.a));
    CHECK(cfg.on_conic(cfg.a));
    CHECK(cfg.on_conic(cfg.r));
    CHECK_FALSE(cfg.on_line(cfg.r));
    const Configuration back = configuration_from_json(to_json(cfg));
    CHECK(to_json(back) == to_json(cfg));

    CHECK_THROWS_AS(make_configuration(7, cfg.line_form, cfg.conic_form, cfg.quadric, cfg.u, cfg.v, cfg.a, cfg.q,
                                       cfg.r, cfg.a, cfg.b),
                    Error);
    CHECK_THROWS_AS(make_configuration(7, cfg.line_form, cfg.conic_form, cfg.quadric, cfg.u, cfg.v, cfg.p, cfg.q,
                                       cfg.a, cfg.a, cfg.b),
                    Error);
    const auto [s, t] = cfg.line_params(cfg.p);
    CHECK(cfg.line_point(s, t) == cfg.p);
    CHECK_THROWS_AS((void)cfg.line_params(cfg.r), Error);
}

TEST_CASE("reflection on the line") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Configuration cfg = build_configuration(seed);
        // T_a K is the plane of L and C, so the residual conic is C itself.
        CHECK(reflect_on_line(cfg, cfg.a) == cfg.b);
        CHECK(reflect_on_line(cfg, cfg.b) == cfg.a);
        for (long j = 1; j <= 6; ++j) {
            const RationalPoint probe = cfg.line_point(Rational(j), Rational(1 - 2 * j));
            if (probe == cfg.a || probe == cfg.b) continue;
            const RationalPoint img = reflect_on_line(cfg, probe);
            CHECK(cfg.on_line(img));
            CHECK(cfg.surface.evaluate(img.coords()).is_zero());
            CHECK(reflect_on_line(cfg, img) == probe);
            // sigma_p sigma_q is the identity on L away from p and q.
            if (probe != cfg.p && probe != cfg.q && img != cfg.p && img != cfg.q) {
                CHECK(apply_word(cfg, "pq", probe) == probe);
            }
        }
        CHECK_THROWS_AS(reflect_on_line(cfg, cfg.r), Error);
    }
}

TEST_CASE("singular point on the line is reported") {
    Configuration cfg = build_configuration(3);
    // Replace Q by x3 * (a linear form) + a quadric vanishing at a.
    const auto& ac = cfg.a.coords();
    MultiPoly lin(4);
    for (int i = 0; i < 3; ++i) lin += ac[static_cast<std::size_t>((i + 1) % 3)] * x(4, i);
    lin -= (ac[0] * ac[1] + ac[1] * ac[2] + ac[2] * ac[0]) / ac[0] * x(4, 0);
    cfg.quadric = lin * x(4, 1) + x(4, 3) * x(4, 3);
    REQUIRE(cfg.quadric.evaluate(ac).is_zero());
    cfg.surface = CubicHypersurface(cfg.line_form * cfg.conic_form + x(4, 3) * cfg.quadric);
    CHECK_THROWS_WITH_AS(reflect_on_line(cfg, cfg.a), doctest::Contains("singular"), Error);
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("return map and attractor") {
    const Configuration cfg = build_configuration(0);
    const ReturnMapReport rm = return_map(cfg);
    CHECK(rm.word == "pqrpqr");
    CHECK(rm.fixes_a);
    CHECK(rm.fixes_b);
    CHECK(rm.probes.size() == 6);
    const auto pa = cfg.line_params(cfg.a);
    const auto pb = cfg.line_params(cfg.b);
    const AttractorReport att = attractor_analysis(rm.map, pa, pb);
    CHECK(att.has_attractor());
    CHECK(abs(att.ratio) != Rational(1));

    // The shorter return word r p q r induces the same map on L.
    const ReturnMapReport short_word = return_map(cfg, "rpqr");
    CHECK(short_word.map == rm.map);

    Configuration same = cfg;
    same.q = same.p;
    CHECK(return_map(same).map == MobiusMap(RatMatrix::identity(2)));
}

TEST_CASE("attractor analysis on constructed maps") {
    const std::pair<Rational, Rational> a{Rational(1), Rational(0)};
    const std::pair<Rational, Rational> b{Rational(0), Rational(1)};
    const AttractorReport third = attractor_analysis(MobiusMap(RatMatrix{{1, 0}, {0, 3}}), a, b);
    CHECK(third.ratio == Rational(1, 3));
    CHECK(third.attractor == 'b');
    CHECK(attractor_analysis(MobiusMap(RatMatrix{{5, 0}, {0, 2}}), a, b).attractor == 'a');
    CHECK_FALSE(attractor_analysis(MobiusMap(RatMatrix{{1, 0}, {0, -1}}), a, b).has_attractor());
    CHECK_THROWS_AS(attractor_analysis(MobiusMap(RatMatrix{{1, 1}, {0, 3}}), a, b), Error);
    CHECK_THROWS_AS(attractor_analysis(MobiusMap(RatMatrix{{1, 0}, {0, 3}}), a, a), Error);
    CHECK_THROWS_AS(MobiusMap(RatMatrix{{1, 2}, {2, 4}}), Error);
    CHECK(MobiusMap(RatMatrix{{2, 4}, {6, 2}}).matrix() == RatMatrix::from_rows({{1, 2}, {3, 1}}));
}

TEST_CASE("bad points and configuration check") {
    const Configuration cfg = build_configuration(0);
    const BadPointSet bad = bad_points(cfg);
    CHECK(bad.points.size() == 6);
    for (const auto& b : bad.points) CHECK(cfg.on_line(b.point));
    CHECK(bad.primed[0] == reflect_on_line(cfg, cfg.p));
    CHECK(cfg.on_line(bad.primed[2]));

    const CheckReport rep = check_configuration(cfg, 300);
    CHECK(rep.passed());
    REQUIRE(rep.starts.size() == 3);
    for (const auto& s : rep.starts) {
        REQUIRE(s.k0.has_value());
        CHECK(((*s.k0 % 3) + 3) % 3 == 0);
        CHECK(*s.k0 < s.start);
    }
    CHECK(rep.safe_radius > Rational(0));
    const auto j = to_json(rep, 9);
    CHECK(j["status"] == "success");

    const CheckReport short_run = check_configuration(cfg, 1);
    CHECK(short_run.status == "inconclusive");
    CHECK_FALSE(short_run.passed());
}

TEST_CASE("orbits") {
    const Configuration cfg = build_configuration(7);
    const RationalPoint start = cfg.line_point(Rational(3), Rational(-1));
    const auto orbit = billiard_orbit(cfg, start, "pqrpqr", 12);
    CHECK(orbit.size() == 13);
    for (const auto& y : orbit) CHECK(cfg.surface.evaluate(y.coords()).is_zero());
    CHECK(orbit[6] == apply_word(cfg, "pqrpqr", start));
    CHECK_THROWS_AS(apply_reflection(cfg, 'p', cfg.p), Error);
    CHECK_THROWS_AS(apply_reflection(cfg, 'x', cfg.p), Error);
}

TEST_CASE("seed search does not depend on the worker count") {
    setenv("REFDYN_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    const SearchResult one = search_configuration(0, 20, 300);
    setenv("REFDYN_THREADS", "4", 1);
    const SearchResult four = search_configuration(0, 20, 300);
    unsetenv("REFDYN_THREADS");
    REQUIRE(one.seed.has_value());
    CHECK(one.seed == four.seed);
    CHECK(one.tried == four.tried);
    CHECK(*one.seed == 0);
    // Seed 3 has |mu_a / mu_b| = 28/27 and stays inconclusive at this horizon.
    const SearchResult from3 = search_configuration(3, 3, 300);
    CHECK_FALSE(from3.seed.has_value());
    CHECK_THROWS_AS(search_configuration(5, 4, 10), Error);
}
