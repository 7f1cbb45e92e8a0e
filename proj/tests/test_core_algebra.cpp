#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "refdyn/algebraic.hpp"
#include "refdyn/factor.hpp"
#include "refdyn/matrix.hpp"
#include "refdyn/multipoly.hpp"
#include "refdyn/number_field.hpp"
#include "refdyn/series.hpp"

using namespace refdyn;

namespace {

RatMatrix triangle_product() {
    return RatMatrix{{3, 1, 1, -3, -2, 0}, {2, 2, 1, -3, -2, 0}, {2, 1, 2, -3, -2, 0},
                     {0, 0, 0, 0, 0, 0},    {1, 0, 1, -1, -1, 0}, {1, 1, 1, -2, -1, 0}};
}

UniPoly expand(const std::vector<std::pair<UniPoly, int>>& fs) {
    UniPoly acc = UniPoly::constant(Rational(1));
    for (const auto& [f, m] : fs) acc *= pow(f, static_cast<unsigned>(m));
    return acc;
}

}  // namespace

TEST_CASE("rational basics") {
    const Rational a = Rational::parse("6/-4");
    CHECK(a == Rational(Integer(-3), Integer(2)));
    CHECK(a.to_fraction_string() == "-3/2");
    CHECK(Rational::parse("7").to_fraction_string() == "7/1");
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK(Rational(Integer(1), Integer(3)).to_decimal(5) == "0.33333");
}

TEST_CASE("char_poly") {
    CHECK(char_poly(RatMatrix{{5}}) == UniPoly::from_descending({1, -5}));
    const RatMatrix two_point{{4, 2, 0, 1}, {0, 0, 1, 0}, {-6, -3, 0, -2}, {-3, -2, 0, 0}};
    CHECK(char_poly(two_point) == pow(UniPoly::from_descending({1, -1}), 4));
    const RatMatrix cl{{0, 1, 0}, {-3, 0, 5}, {-4, 0, 6}};
    // Cofactor expansion: x(x(x-6)) - 1*(-3(x-6) + 20) ... = x^3 - 6x^2 + 3x + 2.
    CHECK(char_poly(cl) == UniPoly::from_descending({1, -6, 3, 2}));
    CHECK_THROWS_AS(char_poly(RatMatrix(2, 3)), Error);
}

TEST_CASE("minimal_poly") {
    CHECK(minimal_poly(RatMatrix::identity(3)) == UniPoly::from_descending({1, -1}));
    CHECK(minimal_poly(RatMatrix{{2, 0}, {0, 2}}) == UniPoly::from_descending({1, -2}));
    // P is diagonalizable (Jordan form computed independently), so every
    // eigenvalue appears once in the minimal polynomial; the repeated
    // version is the characteristic polynomial.
    const UniPoly lin = UniPoly::from_descending({1, -1});
    const UniPoly quad = UniPoly::from_descending({1, -4, -1});
    CHECK(minimal_poly(triangle_product()) == UniPoly::x() * lin * quad);
    CHECK(char_poly(triangle_product()) == pow(UniPoly::x(), 2) * pow(lin, 2) * quad);
    CHECK_THROWS_AS(minimal_poly(RatMatrix(3, 2)), Error);
}

TEST_CASE("minimal_poly divides char_poly on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(rng() % 5) - 2);
        CHECK(divides(minimal_poly(m), char_poly(m)));
        CHECK(evaluate(minimal_poly(m), m) == RatMatrix(n, n));
    }
}

TEST_CASE("factor_over_rationals") {
    const auto f1 = factor_over_rationals(UniPoly::from_descending({1, -6, 3, 2}));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == std::pair{UniPoly::from_descending({1, -1}), 1});
    CHECK(f1[1] == std::pair{UniPoly::from_descending({1, -5, -2}), 1});

    const UniPoly tri = pow(UniPoly::x(), 2) * pow(UniPoly::from_descending({1, -1}), 2) *
                        UniPoly::from_descending({1, -4, -1});
    const auto f2 = factor_over_rationals(tri);
    REQUIRE(f2.size() == 3);
    CHECK(f2[0].second + f2[1].second == 4);
    CHECK(f2[2] == std::pair{UniPoly::from_descending({1, -4, -1}), 1});
    CHECK(exact_div(expand(f2), tri).degree() == 0);

    const auto f3 = factor_over_rationals(UniPoly::from_descending({1, 0, 1}));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].first == UniPoly::from_descending({1, 0, 1}));

    // (x^2+1)(x^2+x+1)(2x^2-3): two irreducible quadratics hidden in a sextic.
    const UniPoly sextic = UniPoly::from_descending({1, 0, 1}) * UniPoly::from_descending({1, 1, 1}) *
                           UniPoly::from_descending({2, 0, -3});
    const auto f4 = factor_over_rationals(sextic);
    CHECK(f4.size() == 3);
    CHECK(exact_div(expand(f4), sextic).degree() == 0);

    CHECK_THROWS_AS(factor_over_rationals(UniPoly{}), Error);
    CHECK_THROWS_AS(factor_over_rationals(UniPoly::from_descending({1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1})), Error);
}

TEST_CASE("isolate_real_roots") {
    const auto r = isolate_real_roots(UniPoly::from_descending({1, -5, -2}));
    REQUIRE(r.size() == 2);
    const auto big = r[1].refined(Rational(Integer(1), Integer(1000000000)));
    CHECK(big.lo() < Rational::parse("53722813233/10000000000"));
    CHECK(Rational::parse("53722813233/10000000000") < big.hi() + Rational::parse("1/10000000000"));
    CHECK(isolate_real_roots(UniPoly::from_descending({1, 0, 1})).empty());
    const auto g = isolate_real_roots(UniPoly::from_descending({1, -4, -1}));
    REQUIRE(g.size() == 2);
    CHECK(std::abs(g[1].to_double() - 4.2360679775) < 1e-9);
    CHECK(r[0] < r[1]);
    CHECK_THROWS_AS(isolate_real_roots(UniPoly{}), Error);
    // Rational roots come back exact.
    const auto q = isolate_real_roots(UniPoly::from_descending({2, -3, 1}));
    REQUIRE(q.size() == 2);
    CHECK(q[0].rational_value() == Rational(Integer(1), Integer(2)));
    CHECK(q[1].rational_value() == Rational(1));
}

TEST_CASE("refine") {
    const AlgebraicReal s2 = isolate_real_roots(UniPoly::from_descending({1, 0, -2}))[1];
    const Rational eps = power_of_ten_inverse(6);
    const AlgebraicReal t = refine(s2, eps);
    CHECK(t.width() < eps);
    CHECK(t.poly().sign_at(t.lo()) * t.poly().sign_at(t.hi()) < 0);
    CHECK(std::abs(t.to_double() - 1.41421356) < 1e-6);
    const AlgebraicReal mu = isolate_real_roots(UniPoly::from_descending({1, -5, -2}))[1];
    const AlgebraicReal m9 = refine(mu, power_of_ten_inverse(9));
    CHECK(std::abs(m9.to_double() - 5.372281323) < 1e-9);
    const AlgebraicReal three = AlgebraicReal::from_rational(Rational(3));
    CHECK(refine(three, eps).is_point());
    CHECK(compare(AlgebraicReal::from_rational(Rational(5)), mu) < 0);
    // The same number described by different polynomials compares equal.
    const UniPoly bigger = UniPoly::from_descending({1, -5, -2}) * UniPoly::from_descending({1, 0, -7});
    for (const auto& root : isolate_real_roots(bigger)) {
        if (root.to_double() > 5.0 && root.to_double() < 6.0) CHECK(root == mu);
    }
}

TEST_CASE("number field arithmetic") {
    const UniPoly m = UniPoly::from_descending({1, -5, -2});
    const auto a = NumberFieldElement::generator(m);
    CHECK(a * a == NumberFieldElement(m, UniPoly::from_descending({5, 2})));
    const auto inv = a.inverse();
    CHECK(inv * a == NumberFieldElement::from_rational(m, Rational(1)));
    CHECK_THROWS_AS((void)NumberFieldElement(m, UniPoly{}).inverse(), Error);
    const UniPoly other = UniPoly::from_descending({1, 0, -2});
    CHECK_THROWS_AS(a + NumberFieldElement::generator(other), Error);
}

TEST_CASE("series substitution and valuation") {
    const TruncatedSeries t = TruncatedSeries::monomial(Rational(1), 1, 4);
    const TruncatedSeries one_plus_t = TruncatedSeries::constant(Rational(1), 4) + t;
    MultiPoly f = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
    const std::vector<TruncatedSeries> args{t, one_plus_t};
    const TruncatedSeries s = substitute_series(f, args);
    CHECK(s == TruncatedSeries({Rational(0), Rational(1), Rational(1), Rational(0)}, 4));
    MultiPoly sq = pow(MultiPoly::variable(1, 0), 2);
    const std::vector<TruncatedSeries> one{t};
    CHECK(valuation(substitute_series(sq, one)) == 2);
    CHECK(valuation(TruncatedSeries({Rational(0), Rational(0), Rational(1), Rational(1)}, 4)) == 2);
    CHECK(valuation(TruncatedSeries({Rational(3), Rational(1)}, 4)) == 0);
    CHECK_THROWS_AS(valuation(TruncatedSeries::zero(4)), Error);
    const std::vector<TruncatedSeries> bad{t, TruncatedSeries::constant(Rational(1), 3)};
    CHECK_THROWS_AS(substitute_series(f, bad), Error);
    CHECK_THROWS_AS(substitute_series(f, one), Error);
}

TEST_CASE("substitute_series is linear and valuations add") {
    std::mt19937_64 rng(5);
    auto rnd = [&] { return Rational(static_cast<long>(rng() % 7) - 3); };
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly f(3), g(3);
        for (int k = 0; k < 4; ++k) {
            f.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)}, rnd());
            g.add_term({static_cast<int>(rng() % 2), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)}, rnd());
        }
        std::vector<TruncatedSeries> args;
        for (int i = 0; i < 3; ++i) {
            std::vector<Rational> c;
            for (int k = 0; k < 8; ++k) c.push_back(rnd());
            c[static_cast<std::size_t>(i)] = Rational(1 + static_cast<long>(rng() % 3));
            for (int k = 0; k < i; ++k) c[static_cast<std::size_t>(k)] = Rational(0);
            args.emplace_back(c, 8);
        }
        CHECK(substitute_series(f + g, args) == substitute_series(f, args) + substitute_series(g, args));
        for (int mu = 0; mu < 3; ++mu) {
            for (int nu = 0; nu < 3; ++nu) {
                const MultiPoly mono = MultiPoly::variable(3, mu) * MultiPoly::variable(3, nu);
                CHECK(valuation(substitute_series(mono, args)) == valuation(args[static_cast<std::size_t>(mu)]) + valuation(args[static_cast<std::size_t>(nu)]));
            }
        }
    }
}

TEST_CASE("ModP reduction is a homomorphism") {
    const Rational a = Rational::parse("-17/5");
    const Rational b = Rational::parse("22/9");
    CHECK(ModP::from_rational(a * b) == ModP::from_rational(a) * ModP::from_rational(b));
    CHECK(ModP::from_rational(a + b) == ModP::from_rational(a) + ModP::from_rational(b));
    CHECK(ModP::from_signed(-1) + ModP(1) == ModP(0));
    CHECK((ModP(123456789).inverse() * ModP(123456789)) == ModP(1));
}

TEST_CASE("multipoly json round trip") {
    MultiPoly f(3);
    f.add_term({1, 2, 0}, Rational::parse("-3/7"));
    f.add_term({0, 0, 3}, Rational(2));
    CHECK(multipoly_from_json(to_json(f)) == f);
    CHECK(to_json(f)["terms"][0]["coef"].get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("exact square and scaling of algebraic numbers") {
    const auto roots = isolate_real_roots(UniPoly::from_descending({1, -5, -2}));
    REQUIRE(roots.size() == 2);
    const AlgebraicReal mu = roots.back();
    const AlgebraicReal mu2 = square(mu);
    CHECK(mu2.poly() == UniPoly::from_descending({1, -29, 4}));
    // mu^2 = 5 mu + 2
    CHECK(std::abs(mu2.to_double() - (5 * mu.to_double() + 2)) < 1e-9);
    CHECK(square(roots.front()) == square(roots.front().negated()));
    CHECK(scaled(mu, Rational(3)) > scaled(mu, Rational(2)));
    CHECK(scaled(mu, Rational(-1)) == mu.negated());
    CHECK(square(AlgebraicReal::from_rational(Rational(-3, 2))) == AlgebraicReal::from_rational(Rational(9, 4)));
    const auto sqrt2 = isolate_real_roots(UniPoly::from_descending({1, 0, -2})).back();
    CHECK(square(sqrt2) == AlgebraicReal::from_rational(Rational(2)));
}
