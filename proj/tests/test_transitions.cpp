#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "refdyn/factor.hpp"
#include "refdyn/transitions.hpp"

using namespace refdyn;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

StateVector state(std::initializer_list<long> v) { return {ints(v), 0}; }

AlgebraicReal largest_root(const UniPoly& p) { return isolate_real_roots(p).back(); }

}  // namespace

TEST_CASE("conic line table rows") {
    CHECK(conic_line_table_row(state({0, 0, 1}), Reflection::p).v == ints({1, 0, 2}));
    CHECK(conic_line_table_row(state({1, 0, 2}), Reflection::q).v == ints({3, 0, 4}));
    // 5*4 - 3*3 = 11 and 6*4 - 4*3 = 12
    CHECK(conic_line_table_row(state({3, 0, 4}), Reflection::r).v == ints({0, 11, 12}));
    CHECK_THROWS_AS(conic_line_table_row(state({3, 0, 2}), Reflection::p), Error);
}

TEST_CASE("conic line steps compose to the displayed matrix") {
    CHECK(conic_line_step(state({0, 0, 1}), Reflection::p).v == ints({1, 0, 2}));
    CHECK(conic_line_word_matrix("pqr") == conic_line_matrix());
    for (long l = 0; l <= 20; ++l) {
        for (long g = 0; g <= 20; ++g) {
            for (long d = l; d <= 20; ++d) {
                StateVector s = state({l, g, d});
                const auto expected = conic_line_matrix().apply(s.v);
                s = conic_line_step(s, Reflection::p);
                s = conic_line_step(s, Reflection::q);
                s = conic_line_step(s, Reflection::r);
                REQUIRE(s.v == expected);
                // The table rows read against the cycle start give the same cycle.
                REQUIRE(conic_line_table_row(state({l, g, d}), Reflection::r).v == expected);
            }
        }
    }
    CHECK_THROWS_AS(conic_line_step(state({2, 0, 1}), Reflection::q), Error);
}

TEST_CASE("conic line matrix spectrum") {
    const RatMatrix m = conic_line_matrix();
    CHECK(char_poly(m) == UniPoly::from_descending({1, -6, 3, 2}));
    CHECK(m.apply(ints({0, 0, 1})) == ints({0, 5, 6}));
    const SpectralData d = dominant_growth(m, ints({0, 0, 1}));
    CHECK(d.factor == UniPoly::from_descending({1, -5, -2}));
    CHECK(d.flags.all());
    // (5 + sqrt 33) / 2
    CHECK(std::abs(d.mu1.to_double() - (5.0 + std::sqrt(33.0)) / 2.0) < 1e-12);
    // Reversed word r, q, p gives a conjugate matrix with the same mu1.
    const SpectralData rev = dominant_growth(conic_line_word_matrix("rqp"), ints({0, 0, 1}));
    CHECK(rev.mu1 == d.mu1);
}

TEST_CASE("iterate") {
    const auto cl = iterate(conic_line_system(), state({0, 0, 1}), 4);
    std::vector<long> deltas;
    for (const auto& s : cl) deltas.push_back(s.v[2].get_si());
    CHECK(deltas == std::vector<long>{1, 6, 36, 196, 1056});
    const auto tri = iterate(triangle_system(), state({1, 0, 0, 0, 0, 0}), 3);
    CHECK(tri.back().v == ints({3, 2, 2, 0, 1, 1}));
    CHECK(tri.back().phase == 0);
    CHECK(iterate(conic_line_system(), state({0, 0, 1}), 0).size() == 1);
    CHECK_THROWS_AS(iterate(conic_line_system(), state({0, 1}), 2), Error);
}

TEST_CASE("triangle system") {
    const TransitionSystem sys = triangle_system();
    CHECK(sys.matrix(0).column(0) == std::vector<Rational>{2, 1, 1, 1, 1, 0});
    const RatMatrix p = triangle_product();
    CHECK(p == RatMatrix{{3, 1, 1, -3, -2, 0}, {2, 2, 1, -3, -2, 0}, {2, 1, 2, -3, -2, 0},
                         {0, 0, 0, 0, 0, 0}, {1, 0, 1, -1, -1, 0}, {1, 1, 1, -2, -1, 0}});
    const SpectralData d = dominant_growth(p, ints({1, 0, 0, 0, 0, 0}));
    CHECK(d.factor == UniPoly::from_descending({1, -4, -1}));
    CHECK(d.flags.all());
    CHECK(std::abs(d.mu1.to_double() - (2.0 + std::sqrt(5.0))) < 1e-12);
}

TEST_CASE("triangle dominance invariant") {
    const auto orbit = iterate(triangle_system(), state({1, 0, 0, 0, 0, 0}), 180);
    for (const auto& s : orbit) {
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) REQUIRE(s.v[i] >= s.v[j]);
    }
}

TEST_CASE("growth matches mu1") {
    const auto cl = iterate(conic_line_system(), state({0, 0, 1}), 40);
    std::vector<Integer> first;
    for (const auto& s : cl) first.push_back(s.v[2]);
    const GrowthEstimate g = growth_estimate(first);
    CHECK(std::abs(g.ratios.back().to_double() - largest_root(UniPoly::from_descending({1, -5, -2})).to_double()) < 1e-6);

    const auto tri = iterate(triangle_system(), state({1, 0, 0, 0, 0, 0}), 120);
    std::vector<Integer> blocks;
    for (std::size_t k = 3; k < tri.size(); k += 3) blocks.push_back(tri[k].v[0]);
    const GrowthEstimate gt = growth_estimate(blocks);
    CHECK(std::abs(gt.ratios.back().to_double() - (2.0 + std::sqrt(5.0))) < 1e-6);
}

TEST_CASE("dominant growth failures") {
    CHECK_THROWS_AS(dominant_growth(RatMatrix::identity(3), ints({1, 0, 0})), Error);
    const SpectralData id = analyze_spectrum(RatMatrix::identity(3), ints({1, 0, 0}));
    CHECK(id.mu1 == AlgebraicReal::from_rational(Rational(1)));
    CHECK_FALSE(id.flags.dominant);
    // v0 inside the non-dominant eigenspace violates hypothesis (iii).
    const SpectralData d = analyze_spectrum(RatMatrix{{3, 0}, {0, 1}}, ints({0, 1}));
    CHECK_FALSE(d.flags.v0_sees_eigenspace);
    CHECK(d.flags.eigenvector_sees_first);
    // Rotation-scaling block with modulus sqrt 5 against a real root 2.
    const SpectralData c = analyze_spectrum(RatMatrix{{1, -2, 0}, {2, 1, 0}, {0, 0, 2}}, ints({1, 1, 1}));
    CHECK_FALSE(c.flags.dominant);
    // Complex pair of modulus sqrt 2 below the real root 3.
    const SpectralData e = analyze_spectrum(RatMatrix{{3, 0, 0}, {1, 1, -1}, {1, 1, 1}}, ints({1, 0, 0}));
    CHECK(e.flags.dominant);
    CHECK_THROWS_AS(analyze_spectrum(RatMatrix{{0, 1}, {-1, 0}}, ints({1, 0})), Error);
}

TEST_CASE("growth_estimate") {
    const GrowthEstimate g = growth_estimate(ints({1, 6, 36, 196, 1056}));
    CHECK(g.ratios == std::vector<Rational>{6, 6, Rational(Integer(49), Integer(9)), Rational(Integer(264), Integer(49))});
    CHECK(growth_estimate(ints({5, 5, 5})).ratios == std::vector<Rational>{1, 1});
    for (const auto& r : growth_estimate(ints({1, 2, 4, 8, 16})).ratios) CHECK(r == Rational(2));
    CHECK(std::abs(growth_estimate(ints({1, 2, 4, 8, 16})).roots.back() - 2.0) < 1e-12);
    CHECK_THROWS_AS(growth_estimate({}), Error);
}

TEST_CASE("degree tuples") {
    const DegreeTuple ones = DegreeTuple::from_rationals({1, 1, 1, 1});
    CHECK(fibration_degrees(ones) == DegreeTuple::from_rationals({1, 1, 1, 1, 1}));
    CHECK(fibration_degrees(DegreeTuple::from_rationals({1, 2, 1})) == DegreeTuple::from_rationals({1, 2, 2, 1}));
    CHECK(fibration_degrees(DegreeTuple::from_rationals({1, 3, 2, 1})) == DegreeTuple::from_rationals({1, 3, 3, 2, 1}));
    CHECK(inverse_tuple(DegreeTuple::from_rationals({1, 2, 3, 4, 1})) == DegreeTuple::from_rationals({1, 4, 3, 2, 1}));
    const DegreeTuple gen = DegreeTuple::from_rationals({1, 32, 32, 32, 1});
    CHECK(inverse_tuple(gen) == gen);
    CHECK_THROWS_AS(DegreeTuple::from_rationals({2, 1}), Error);
    CHECK_THROWS_AS(DegreeTuple::from_rationals({1, Rational(Integer(1), Integer(2)), 1}), Error);
}

TEST_CASE("log concavity") {
    const AlgebraicReal mu = largest_root(UniPoly::from_descending({1, -5, -2}));
    const AlgebraicReal one = AlgebraicReal::from_rational(Rational(1));
    const DegreeTuple t({one, mu, mu, mu, one});
    const auto rep = check_log_concavity(t);
    CHECK(rep.holds);
    CHECK(rep.certificate.size() == 3);
    CHECK_FALSE(check_log_concavity(DegreeTuple::from_rationals({1, 2, 5, 2, 1})).holds);
    CHECK(check_log_concavity(DegreeTuple::from_rationals({1, 4, 4, 4, 1})).holds);
    // Equality lambda_1^2 = lambda_0 lambda_2 with irrational entries is decided exactly.
    const AlgebraicReal tri = largest_root(UniPoly::from_descending({1, -4, -1}));
    CHECK(check_log_concavity(DegreeTuple({one, tri, square(tri), tri, one})).holds);
    CHECK_FALSE(check_log_concavity(DegreeTuple({one, tri, scaled(square(tri), Rational(2)), tri, one})).holds);
    const DegreeTuple f = fibration_degrees(t);
    CHECK(check_log_concavity(f).holds);
    // mu^2 is about 28.86, below sqrt(850) which is about 29.15.
    const AlgebraicReal big = largest_root(UniPoly::from_descending({1, 0, -850}));
    CHECK_FALSE(check_log_concavity(DegreeTuple({one, mu, big, one})).holds);
}

TEST_CASE("json round trips") {
    const TransitionSystem sys = triangle_system();
    const TransitionSystem back = transition_system_from_json(to_json(sys));
    CHECK(back.matrices() == sys.matrices());
    StateVector s{{Integer("123456789012345678901234567890"), Integer(-4)}, 2};
    CHECK(state_vector_from_json(to_json(s)) == s);
    CHECK(to_json(s)["v"][1].get<int>() == -4);
}
