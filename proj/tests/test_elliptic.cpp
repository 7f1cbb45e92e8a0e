#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "refdyn/elliptic.hpp"
#include "refdyn/random.hpp"

using namespace refdyn;

namespace {

FormalPoint fp(std::vector<long long> c) { return FormalPoint(std::move(c)); }

}  // namespace

TEST_CASE("reflection formula") {
    const FormalPoint p1 = FormalPoint::basis(3, 1);
    CHECK(reflect(2, p1) == fp({-1, -1, 0}));
    CHECK(reflect(3, fp({-1, -1, 0})) == fp({1, 1, -1}));
    CHECK(reflect(2, p1).to_string() == "-p1 - p2");
    CHECK(fp({2, 0, -1}).to_string() == "2p1 - p3");
    CHECK(fp({0, 0, 0}).to_string() == "0");
    CHECK_THROWS_AS(reflect(4, p1), Error);
    CHECK_THROWS_AS(reflect(0, p1), Error);
    CHECK_THROWS_AS(FormalPoint::basis(3, 4), Error);
}

TEST_CASE("involution and sign flips on random points") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.uniform(3, 9));
        std::vector<long long> c;
        for (int k = 0; k < n; ++k) c.push_back(rng.symmetric(20));
        const FormalPoint x(c);
        const int i = static_cast<int>(rng.uniform(1, n));
        CHECK(reflect(i, reflect(i, x)) == x);
        const FormalPoint y = reflect(i, x);
        for (int k = 1; k <= n; ++k) {
            if (k != i) CHECK(y.coeff(k) == -x.coeff(k));
        }
        CHECK(y.coeff(i) == -1 - x.coeff(i));
    }
}

TEST_CASE("three point orbit by hand") {
    const auto pts = orbit(FormalPoint::basis(3, 1), {2, 3, 1, 2, 3, 1});
    REQUIRE(pts.size() == 7);
    CHECK(pts[1] == fp({-1, -1, 0}));
    CHECK(pts[2] == fp({1, 1, -1}));
    CHECK(pts[3] == fp({-2, -1, 1}));
    CHECK(pts[4] == fp({2, 0, -1}));
    CHECK(pts[5] == fp({-2, 0, 0}));
    CHECK(pts[6] == fp({1, 0, 0}));
    CHECK(orbit(pts[3], {}).size() == 1);
}

TEST_CASE("four points drift") {
    const auto pts = orbit(FormalPoint::basis(4, 1), {2, 3, 4, 1, 2, 3, 4, 1});
    CHECK(pts[4].coeff(1) == 0);
    CHECK(pts[8].coeff(1) == -1);
}

TEST_CASE("first return words") {
    CHECK(first_return_word(3) == ReflectionWord{2, 3, 1, 2, 3, 1});
    CHECK(first_return_word(5) == ReflectionWord{2, 3, 4, 5, 1, 2, 3, 4, 5, 1});
    CHECK_THROWS_AS(first_return_word(4), Error);
    CHECK_THROWS_AS(first_return_word(1), Error);
    for (int n = 3; n <= 11; n += 2) {
        const auto rep = check_first_return(n);
        CHECK(rep.returns);
        CHECK(rep.avoids_basis);
        CHECK(rep.points.size() == static_cast<std::size_t>(2 * n + 1));
    }
}

TEST_CASE("avoidance") {
    for (int n = 3; n <= 10; ++n) {
        const auto rep = avoidance_check(n, 500);
        CHECK(rep.passed());
        CHECK(rep.own_coeffs.size() == static_cast<std::size_t>(n));
        if (n % 2 == 0) {
            CHECK(rep.drift_certified);
            const auto& c = rep.own_coeffs.front();
            REQUIRE(c.size() >= 4);
            for (std::size_t m = 0; m < c.size(); ++m) CHECK(c[m] == -static_cast<long long>(m));
        } else {
            CHECK_FALSE(rep.drift_certified);
            // p_i-coefficient alternates between -2 and 1 for odd N.
            CHECK(rep.own_coeffs.front()[0] == -2);
            CHECK(rep.own_coeffs.front()[1] == 1);
        }
    }
    const auto short_run = avoidance_check(4, 8);
    CHECK(short_run.passed());
    CHECK_FALSE(short_run.drift_certified);

    const auto j = to_json(avoidance_check(4, 100));
    CHECK(j["N"] == 4);
    CHECK(j["hits"].empty());
    CHECK(j["certificate"]["coeffs_after_sigma1"][3] == -3);
    CHECK_THROWS_AS(avoidance_check(2, 10), Error);
    CHECK_THROWS_AS(avoidance_check(4, 0), Error);
}
