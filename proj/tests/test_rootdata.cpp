#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "afq/rootdata.hpp"

using namespace afq;

TEST_CASE("family parsing") {
    CHECK(family_from_string("A") == Family::A);
    CHECK(family_from_string("D") == Family::D);
    CHECK(family_to_string(Family::C) == "C");
    CHECK_THROWS_AS(family_from_string("E"), std::invalid_argument);
}

TEST_CASE("rank bounds") {
    CHECK_THROWS_AS(make_cartan(Family::A, 0), std::domain_error);
    CHECK_THROWS_AS(make_cartan(Family::B, 2), std::domain_error);
    CHECK_THROWS_AS(make_cartan(Family::C, 1), std::domain_error);
    CHECK_THROWS_AS(make_cartan(Family::D, 3), std::domain_error);
    CHECK_NOTHROW(make_cartan(Family::B, 3));
}

TEST_CASE("extended Cartan matrices") {
    const CartanData a1 = make_cartan(Family::A, 1);
    CHECK(a1.a == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});

    const CartanData a2 = make_cartan(Family::A, 2);
    CHECK(a2.a == std::vector<std::vector<int>>{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});

    const CartanData c2 = make_cartan(Family::C, 2);
    CHECK(c2.a == std::vector<std::vector<int>>{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}});
    CHECK(c2.d == std::vector<int>{2, 1, 2});
    CHECK(c2.marks == std::vector<int>{1, 2, 1});
    CHECK(c2.comarks == std::vector<int>{1, 1, 1});

    const CartanData b3 = make_cartan(Family::B, 3);
    CHECK(b3.a[0][2] == -1);
    CHECK(b3.a[2][0] == -1);
    CHECK(b3.a[0][1] == 0);
    CHECK(b3.a[2][3] == -1);
    CHECK(b3.a[3][2] == -2);
    CHECK(b3.d == std::vector<int>{2, 2, 2, 1});
    CHECK(b3.marks == std::vector<int>{1, 1, 2, 2});
    CHECK(b3.comarks == std::vector<int>{1, 1, 2, 1});

    const CartanData d4 = make_cartan(Family::D, 4);
    CHECK(d4.marks == std::vector<int>{1, 1, 2, 1, 1});
    CHECK(d4.comarks == d4.marks);
    CHECK(d4.d == std::vector<int>(5, 1));
}

TEST_CASE("symmetrizability and delta identity") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        const int lo = f == Family::A ? 1 : f == Family::C ? 2 : f == Family::B ? 3 : 4;
        for (int l = lo; l <= lo + 2; ++l) {
            const CartanData c = make_cartan(f, l);
            for (int i = 0; i <= l; ++i) {
                CHECK(c.a[i][i] == 2);
                int s = c.a[i][0];
                for (int k = 1; k <= l; ++k) s += c.marks[k] * c.a[i][k];
                CHECK(s == 0);
                for (int j = 0; j <= l; ++j) CHECK(c.d[i] * c.a[i][j] == c.d[j] * c.a[j][i]);
            }
        }
    }
}

TEST_CASE("pairings") {
    const CartanData a2 = make_cartan(Family::A, 2);
    const AffineWeight w{{1, 2, 0}, 3};
    CHECK(pair_with_coroot(w, 0) == 1);
    CHECK(pair_with_coroot(w, 1) == 2);
    CHECK(pair_with_delta(a2, w) == 3);
    CHECK(pair_with_root(a2, w, 1) == 2);
    CHECK(is_dominant(w));
    CHECK_FALSE(is_dominant(AffineWeight{{1, -1, 0}, 0}));

    const AffineWeight delta{{0, 0, 0}, 1};
    for (int i = 0; i < 3; ++i) CHECK(pair_with_coroot(delta, i) == 0);
    CHECK(pair_with_delta(a2, delta) == 0);
}

TEST_CASE("embedding finite weights") {
    const CartanData a2 = make_cartan(Family::A, 2);
    CHECK(embed(a2, FiniteWeight{{1, 0}}) == AffineWeight{{-1, 1, 0}, 0});
    const CartanData b3 = make_cartan(Family::B, 3);
    // varpi_2 has comark 2, so n_0 = -2.
    CHECK(embed(b3, FiniteWeight{{0, 1, 0}}) == AffineWeight{{-2, 0, 1, 0}, 0});
    CHECK(add_delta(embed(a2, FiniteWeight{{1, 0}}), 2).delta_coeff == 2);
}

TEST_CASE("Weyl orbits") {
    const CartanData a2 = make_cartan(Family::A, 2);
    const auto orbit = weyl_orbit(a2, FiniteWeight{{1, 0}});
    CHECK(orbit.size() == 3);
    CHECK(orbit.count(FiniteWeight{{1, 0}}) == 1);
    CHECK(orbit.count(FiniteWeight{{-1, 1}}) == 1);
    CHECK(orbit.count(FiniteWeight{{0, -1}}) == 1);
    CHECK(lowest_weight_in_orbit(a2, FiniteWeight{{1, 0}}) == FiniteWeight{{0, -1}});

    const CartanData c3 = make_cartan(Family::C, 3);
    CHECK(weyl_orbit(c3, FiniteWeight{{1, 0, 0}}).size() == 6);
    CHECK(lowest_weight_in_orbit(c3, FiniteWeight{{1, 0, 0}}) == FiniteWeight{{-1, 0, 0}});

    const CartanData d4 = make_cartan(Family::D, 4);
    CHECK(weyl_orbit(d4, FiniteWeight{{1, 0, 0, 0}}).size() == 8);
    CHECK(weyl_orbit(d4, zero_finite(d4)).size() == 1);
}

TEST_CASE("theta coroot pairing") {
    for (auto [f, l] : std::vector<std::pair<Family, int>>{
             {Family::A, 3}, {Family::B, 3}, {Family::C, 2}, {Family::D, 4}}) {
        const CartanData c = make_cartan(f, l);
        FiniteWeight v1 = zero_finite(c);
        v1.varpi[0] = 1;
        CHECK(pair_finite_theta_coroot(c, v1) == 1);
        CHECK(pair_finite_theta_coroot(c, lowest_weight_in_orbit(c, v1)) == -1);
    }
    const CartanData b3 = make_cartan(Family::B, 3);
    CHECK(pair_finite_theta_coroot(b3, FiniteWeight{{0, 1, 0}}) == 2);
}
