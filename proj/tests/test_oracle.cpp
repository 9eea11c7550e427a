#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fib/coset.hpp"
#include "fib/snf.hpp"

using namespace fib;

namespace {

Presentation cyclic_group(int n) {
    Presentation p;
    p.add_generator("a");
    p.add_relator(Word::power({0, +1}, n));
    return p;
}

}  // namespace

TEST_CASE("cyclic group of order 5") {
    CosetResult r = coset_enumerate(cyclic_group(5));
    REQUIRE(r.status == CosetResult::Status::finite);
    CHECK(r.order == 5);
}

TEST_CASE("small Fibonacci orders, both strategies agree") {
    for (auto [r, n, expect] :
         {std::tuple{2, 3, 8}, {2, 4, 5}, {2, 5, 11}, {3, 3, 2}, {4, 4, 3}, {2, 2, 1}}) {
        Presentation p = build_fibonacci(r, n);
        CosetResult hlt = coset_enumerate(p, 200000, CosetStrategy::hlt);
        CosetResult fel = coset_enumerate(p, 200000, CosetStrategy::felsch);
        REQUIRE(hlt.status == CosetResult::Status::finite);
        REQUIRE(fel.status == CosetResult::Status::finite);
        CHECK(hlt.order == expect);
        CHECK(fel.order == expect);
    }
}

TEST_CASE("overflow is an outcome, not an error") {
    // Z = <a | > cannot close
    Presentation p;
    p.add_generator("a");
    CosetResult r = coset_enumerate(p, 50);
    CHECK(r.status == CosetResult::Status::overflow);
}

TEST_CASE("definition strategies agree on every finite case") {
    for (const OrderCase& c : finite_fibonacci_cases()) {
        Presentation p = build_fibonacci(c.r, c.n);
        CosetResult hlt = coset_enumerate(p, 500000, CosetStrategy::hlt);
        CosetResult fel = coset_enumerate(p, 500000, CosetStrategy::felsch);
        REQUIRE(hlt.status == CosetResult::Status::finite);
        REQUIRE(fel.status == CosetResult::Status::finite);
        INFO("F(" << c.r << "," << c.n << ")");
        CHECK(hlt.order == c.expected);
        CHECK(fel.order == hlt.order);
    }
}

TEST_CASE("smith normal form of simple matrices") {
    IntegerMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 6;
    auto d = smith_normal_form(m);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 2);
    CHECK(d[1] == 6);

    IntegerMatrix m2(2, 2);
    m2.at(0, 0) = 2;
    m2.at(0, 1) = 0;
    m2.at(1, 0) = 0;
    m2.at(1, 1) = 3;
    auto d2 = smith_normal_form(m2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == 1);
    CHECK(d2[1] == 6);
}

TEST_CASE("invariant factors divide in a chain under random unimodular moves") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 3 + rng() % 3;
        IntegerMatrix m(n, n);
        for (size_t i = 0; i < n; i++)
            for (size_t j = 0; j < n; j++) m.at(i, j) = static_cast<std::int64_t>(rng() % 19) - 9;
        auto base = smith_normal_form(m);
        for (size_t i = 0; i + 1 < base.size(); i++)
            if (base[i] != 0) CHECK(base[i + 1] % base[i] == 0);
        // random row/column operations leave the factors unchanged
        IntegerMatrix t = m;
        for (int op = 0; op < 12; op++) {
            size_t i = rng() % n, j = rng() % n;
            if (i == j) continue;
            std::int64_t k = static_cast<std::int64_t>(rng() % 7) - 3;
            if (rng() % 2)
                for (size_t c = 0; c < n; c++) t.at(i, c) += k * t.at(j, c);
            else
                for (size_t r2 = 0; r2 < n; r2++) t.at(r2, i) += k * t.at(r2, j);
        }
        CHECK(smith_normal_form(t) == base);
    }
}

namespace {

// fraction-free (Bareiss) determinant, an independent route to the
// abelianization order for full-rank relation matrices
BigInt bareiss_det(IntegerMatrix m) {
    REQUIRE(m.rows == m.cols);
    size_t n = m.rows;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m.at(k, k) == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) swap_row++;
            if (swap_row == n) return 0;
            for (size_t c = 0; c < n; c++) std::swap(m.at(k, c), m.at(swap_row, c));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++)
            for (size_t j = k + 1; j < n; j++)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace

TEST_CASE("invariant factor product equals the determinant route") {
    for (const OrderCase& c : finite_fibonacci_cases()) {
        IntegerMatrix m = exponent_matrix(build_fibonacci(c.r, c.n));
        BigInt det = bareiss_det(m);
        BigInt product = 1;
        for (const BigInt& d : smith_normal_form(m)) product *= d;
        INFO("F(" << c.r << "," << c.n << ")");
        REQUIRE(det != 0);
        CHECK(product == (det < 0 ? BigInt(-det) : det));
    }
}

TEST_CASE("abelianizations of the named groups") {
    auto inv23 = abelianization(build_fibonacci(2, 3));
    REQUIRE(inv23.size() == 2);
    CHECK(inv23[0] == 2);
    CHECK(inv23[1] == 2);

    auto inv24 = abelianization(build_fibonacci(2, 4));
    REQUIRE(inv24.size() == 1);
    CHECK(inv24[0] == 5);

    // <a, b | [a,b]> is free abelian of rank 2
    Presentation fa;
    fa.add_generator("a");
    fa.add_generator("b");
    fa.add_relator(Word{{{0, +1}, {1, +1}, {0, -1}, {1, -1}}});
    auto invfa = abelianization(fa);
    REQUIRE(invfa.size() == 2);
    CHECK(invfa[0] == 0);
    CHECK(invfa[1] == 0);
}

TEST_CASE("|abelianization| divides the enumerated order") {
    for (const OrderCase& c : finite_fibonacci_cases()) {
        auto inv = abelianization(build_fibonacci(c.r, c.n));
        BigInt ab_order = 1;
        bool finite = true;
        for (const BigInt& d : inv) {
            if (d == 0) finite = false;
            else ab_order *= d;
        }
        REQUIRE(finite);  // all named cases have finite abelianization
        CHECK(BigInt(c.expected) % ab_order == 0);
    }
}
