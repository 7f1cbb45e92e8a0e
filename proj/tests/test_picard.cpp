#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "refdyn/picard.hpp"

using namespace refdyn;

TEST_CASE("single reflection action") {
    const PicardAction s = single_reflection_action();
    CHECK(s.basis().labels() == std::vector<std::string>{"H~", "E~(p)", "F~(p)"});
    CHECK(s.matrix() == RatMatrix{{2, 1, 0}, {-3, -2, 0}, {-1, -1, 1}});
    CHECK(compose(s, s).matrix() == RatMatrix::identity(3));
    // trace 1, det -1, and an involution: eigenvalues 1, 1, -1
    const UniPoly lin = UniPoly::from_descending({1, -1});
    CHECK(char_poly(s.matrix()) == lin * lin * UniPoly::from_descending({1, 1}));
    CHECK(real_spectral_radius(s.matrix()) == AlgebraicReal::from_rational(Rational(1)));
}

TEST_CASE("two point action") {
    const PicardAction t = two_point_action();
    CHECK(t.matrix() == RatMatrix{{4, 2, 0, 1}, {0, 0, 1, 0}, {-6, -3, 0, -2}, {-3, -2, 0, 0}});
    const UniPoly unip = pow(UniPoly::from_descending({1, -1}), 4);
    CHECK(char_poly(t.matrix()) == unip);
    CHECK((t.matrix() - RatMatrix::identity(4)).rank() > 0);
    CHECK(real_spectral_radius(t.matrix()) == AlgebraicReal::from_rational(Rational(1)));
    CHECK(char_poly(compose(t, t).matrix()) == unip);
}

TEST_CASE("compose checks bases") {
    const PicardAction id(PicardBasis({"H", "P", "Q", "R"}), RatMatrix::identity(4));
    CHECK(compose(two_point_action(), id).matrix() == two_point_action().matrix());
    CHECK_THROWS_AS(compose(single_reflection_action(), two_point_action()), Error);
    CHECK_THROWS_AS(PicardBasis({"H", "H"}), Error);
    CHECK_THROWS_AS(PicardAction(PicardBasis({"H"}), RatMatrix::identity(2)), Error);
}

TEST_CASE("degree tuple for general points") {
    const auto one = AlgebraicReal::from_rational(Rational(1));
    for (int n : {1, 2}) {
        for (const auto& v : degree_tuple_generic(n)) CHECK(v == one);
    }
    for (const auto& v : degree_tuple_generic(5)) CHECK(v == AlgebraicReal::from_rational(Rational(32)));
    CHECK_THROWS_AS(degree_tuple_generic(0), Error);
}

TEST_CASE("spectral radius rejects non-real spectra") {
    CHECK_THROWS_AS(real_spectral_radius(RatMatrix{{0, -1}, {1, 0}}), Error);
}
