#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "refdyn/reflection_maps.hpp"

using namespace refdyn;

namespace {

MultiPoly x(int i) { return MultiPoly::variable(6, i); }
MultiPoly zero6() { return MultiPoly(6); }

}  // namespace

TEST_CASE("single reflection formula") {
    const AdaptedCubic deg(zero6(), x(2) * x(2) * x(2));
    const ProjectiveMap s = single_reflection_formula(deg);
    CHECK(s.components()[0] == x(0) * x(1));
    CHECK(s.components()[3] == -(x(1) * x(3)));
    const ProjectiveMap reduced = s.content_removed();
    CHECK(reduced.components()[0] == x(0));
    CHECK(reduced.components()[4] == -x(4));
    CHECK(reduced.projectively_equal(s));
    CHECK(verify_preserves_cubic(deg));
    CHECK(verify_involution(deg));

    Rng rng(3);
    const AdaptedCubic ac = AdaptedCubic::random(rng);
    const ProjectiveMap t = single_reflection_formula(ac);
    CHECK(t.components()[0] == x(0) * x(1) + ac.q());
    CHECK(t.degree() == 2);
}

TEST_CASE("identities hold for random adapted cubics") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const AdaptedCubic ac = AdaptedCubic::random(rng);
        CHECK(verify_preserves_cubic(ac));
        CHECK(verify_involution(ac));
    }
}

TEST_CASE("deliberate breaks are detected") {
    Rng rng(8);
    const AdaptedCubic ac = AdaptedCubic::random(rng);
    auto comps = single_reflection_formula(ac).components();
    auto dropped = comps;
    dropped[0] = x(0) * x(1);
    CHECK_FALSE(verify_preserves_cubic(ac, ProjectiveMap(dropped)));
    auto flipped = comps;
    flipped[2] = -flipped[2];
    CHECK_FALSE(verify_involution(ProjectiveMap(flipped)));
}

TEST_CASE("adapted cubic validation and json") {
    CHECK_THROWS_AS(AdaptedCubic(x(0) * x(1), zero6()), Error);
    CHECK_THROWS_AS(AdaptedCubic(x(1), zero6()), Error);
    Rng rng(1);
    const AdaptedCubic ac = AdaptedCubic::random(rng);
    const AdaptedCubic back = adapted_cubic_from_json(to_json(ac));
    CHECK(back.q() == ac.q());
    CHECK(back.c() == ac.c());
}

TEST_CASE("content removal") {
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const AdaptedCubic ac = AdaptedCubic::random(rng);
        const ProjectiveMap twice = single_reflection_formula(ac).compose(single_reflection_formula(ac));
        const ProjectiveMap once = twice.content_removed();
        CHECK(once.content_removed() == once);
        CHECK(once.degree() == 1);
        for (int k = 0; k < 10; ++k) {
            std::vector<Rational> pt;
            for (int i = 0; i < 6; ++i) pt.push_back(rng.rational(7));
            if (pt[1].is_zero()) continue;
            const auto a = twice.evaluate(pt);
            const auto b = once.evaluate(pt);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[i] * b[j] == a[j] * b[i]);
        }
    }
}

TEST_CASE("monomial supports") {
    const auto m = monomial_supports();
    auto has = [](const MonomialSupport& s, int a, int b) { return s.contains((x(a) * x(b)).terms().begin()->first); };
    CHECK(has(m[0], 3, 4));
    CHECK(has(m[0], 0, 5));
    CHECK(has(m[2], 2, 3));
    CHECK_FALSE(has(m[0], 4, 5));
    CHECK(has(m[1], 3, 5));
    CHECK(has(m[1], 1, 4));
    CHECK_FALSE(has(m[1], 0, 4));
    // 3 * 5 products minus the 3 repeated squares-and-swaps of x_0..x_2, plus 2.
    for (const auto& s : m) CHECK(s.size() == 6 + 6 + 2);
}

TEST_CASE("triangle formulas") {
    const TriangleChart chart(x(3) * x(4), x(3) * x(5), x(4) * x(5));
    const auto maps = triangle_formulas(chart);
    const std::vector<MultiPoly> s0{x(0) * x(0), x(0) * x(1), x(0) * x(2), x(0) * x(3), x(0) * x(4), x(3) * x(4)};
    CHECK(maps[0].components() == s0);
    CHECK(maps[1].components()[4] == x(3) * x(5));
    CHECK(maps[2].components()[3] == x(4) * x(5));
    CHECK_THROWS_AS(TriangleChart(x(3) * x(4), x(0) * x(4), x(4) * x(5)), Error);

    Rng rng(99);
    const TriangleChart rc = TriangleChart::random(rng);
    const auto rm = triangle_formulas(rc);
    const auto supports = monomial_supports();
    for (int l = 0; l < 3; ++l) CHECK(in_support(rc.quadric(l), supports[static_cast<std::size_t>(l)]));
    const PlaneCheck pc = check_triangle_planes(rm);
    CHECK(pc.first_three_are_products);
    CHECK(pc.triangle_plane_invariant);
    const TriangleChart back = triangle_chart_from_json(to_json(rc));
    CHECK(back.quadric(1) == rc.quadric(1));
}
