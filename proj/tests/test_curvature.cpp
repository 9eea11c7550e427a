#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fib/curvature.hpp"

using namespace fib;

TEST_CASE("table of 4-gon curvatures") {
    auto c = [](std::vector<int> d) { return curvature(d); };
    CHECK(c({3, 3, 3, 3}) == Angle::pi(2, 3));
    CHECK(c({3, 3, 3, 4}) == Angle::pi(1, 2));
    CHECK(c({3, 3, 3, 5}) == Angle::pi(2, 5));
    CHECK(c({3, 3, 3, 6}) == Angle::pi(1, 3));
    CHECK(c({3, 3, 4, 4}) == Angle::pi(1, 3));
    CHECK(c({3, 3, 4, 5}) == Angle::pi(7, 30));
    CHECK(c({3, 3, 4, 6}) == Angle::pi(1, 6));
    CHECK(c({3, 3, 5, 5}) == Angle::pi(2, 15));
    CHECK(c({3, 3, 5, 6}) == Angle::pi(1, 15));
    CHECK(c({3, 3, 5, 7}) == Angle::pi(2, 105));
    CHECK(c({3, 3, 6, 6}) == Angle::zero());
    CHECK(c({3, 4, 4, 5}) == Angle::pi(1, 15));
    CHECK(c({3, 4, 4, 6}) == Angle::zero());
    CHECK(c({3, 4, 4, 7}) == Angle::pi(-1, 21));
    CHECK(c({3, 4, 5, 5}) == Angle::pi(-1, 30));
    CHECK(c({3, 4, 5, 6}) == Angle::pi(-1, 10));
    CHECK(c({3, 4, 5, 7}) == Angle::pi(-31, 210));
    CHECK(c({3, 4, 6, 6}) == Angle::pi(-1, 6));
    CHECK(c({3, 5, 5, 5}) == Angle::pi(-2, 15));
    CHECK(c({4, 4, 4, 6}) == Angle::pi(-1, 6));
    CHECK(c({4, 4, 6, 6}) == Angle::pi(-1, 3));
}

TEST_CASE("table of 6-gon curvatures") {
    auto c = [](std::vector<int> d) { return curvature(d); };
    CHECK(c({3, 3, 3, 3, 3, 4}) == Angle::pi(-1, 6));
    CHECK(c({3, 3, 3, 3, 4, 4}) == Angle::pi(-1, 3));
    CHECK(c({3, 3, 3, 3, 4, 5}) == Angle::pi(-13, 30));
    CHECK(c({3, 3, 3, 3, 4, 6}) == Angle::pi(-1, 2));
    CHECK(c({3, 3, 3, 4, 4, 4}) == Angle::pi(-1, 2));
    CHECK(c({3, 3, 3, 4, 4, 5}) == Angle::pi(-3, 5));
    CHECK(c({3, 3, 3, 4, 4, 6}) == Angle::pi(-2, 3));
    CHECK(c({3, 3, 4, 4, 4, 4}) == Angle::pi(-2, 3));
}

TEST_CASE("curvature is permutation invariant and monotone") {
    std::vector<int> d{3, 4, 5, 7, 3, 6};
    Angle base = curvature(d);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; t++) {
        std::shuffle(d.begin(), d.end(), rng);
        CHECK(curvature(d) == base);
    }
    // bumping any degree strictly decreases curvature
    for (size_t i = 0; i < d.size(); i++) {
        std::vector<int> up = d;
        up[i]++;
        CHECK(curvature(up) < base);
    }
}

TEST_CASE("degree guards") {
    CHECK_THROWS(curvature({}));
    CHECK_THROWS(curvature({3, 2, 3}));
    CHECK(curvature({2, 2}, true) == Angle::pi(2));  // raw mode only
    CHECK(curvature({6, 6, 6}) == Angle::zero());    // flat triangle
}

TEST_CASE("closed form matches the raw formula for all size <= 14 multisets") {
    // (2-m)pi + 2pi sum(1/d) over m1 threes, m2 fours, m3 fives with m = 8+k
    for (int m = 8; m <= 14; m++) {
        int k = m - 8;
        for (int m2 = 0; m2 <= m; m2++)
            for (int m3 = 0; m2 + m3 <= m; m3++) {
                std::vector<int> degs;
                for (int i = 0; i < m - m2 - m3; i++) degs.push_back(3);
                for (int i = 0; i < m2; i++) degs.push_back(4);
                for (int i = 0; i < m3; i++) degs.push_back(5);
                CHECK(curvature_closed_form(k, m2, m3) == curvature(degs));
            }
    }
    CHECK(curvature_closed_form(0, 0, 0) == Angle::pi(-2, 3));
    CHECK(curvature_closed_form(0, 1, 0) == Angle::pi(-25, 30));
    CHECK(curvature_closed_form(1, 0, 1) == Angle::pi(-38, 30));
    CHECK_THROWS(curvature_closed_form(0, 5, 4));
}

TEST_CASE("surplus, deficit, dagger, delta0") {
    CHECK(surplus(Angle::pi(1, 5)) == Angle::pi(1, 15));
    CHECK(vertex_deficit(3) == Angle::zero());
    CHECK(vertex_deficit(4) == Angle::pi(-1, 6));
    CHECK(dagger_bound(10) == Angle::zero());
    CHECK(dagger_bound(9) == Angle::pi(1, 5));
    CHECK(dagger_bound(0) == Angle::pi(2));
    for (int n2 = 0; n2 <= 40; n2++) CHECK((dagger_bound(n2).sign() <= 0) == (n2 >= 10));
    for (std::int64_t k : {1, 5, 100, 10000}) CHECK(delta0_bound(k) == Angle::pi(2));
    for (std::int64_t k = 1; k <= 40; k++) CHECK((type_a_bound(k).sign() <= 0) == (k >= 10));
}

TEST_CASE("platonic solids all have total curvature 4 pi") {
    for (const SphericalComplex& k :
         {tetrahedron(), cube(), octahedron(), dodecahedron(), icosahedron()})
        CHECK(total_curvature(k) == Angle::pi(4));
}

TEST_CASE("randomized chi = 2 complexes keep total curvature 4 pi") {
    std::mt19937_64 seeds(99);
    for (int t = 0; t < 100; t++) {
        SphericalComplex base = (t % 2 == 0) ? tetrahedron() : cube();
        SphericalComplex k = randomized_complex(base, 3 + t % 7, seeds());
        CHECK(k.euler_characteristic() == 2);
        CHECK(total_curvature(k) == Angle::pi(4));
    }
}

TEST_CASE("broken complexes are rejected") {
    SphericalComplex torus_like;  // a square with opposite sides glued has chi 0
    torus_like.faces = {{0, 1, 0, 1}};
    CHECK_THROWS(total_curvature(torus_like));
}
