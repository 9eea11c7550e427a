#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fib/word.hpp"

using namespace fib;

namespace {

Word random_word(std::mt19937_64& rng, int ngens, int len) {
    Word w;
    for (int i = 0; i < len; i++)
        w.letters.push_back({static_cast<int>(rng() % ngens), rng() % 2 ? +1 : -1});
    return w;
}

}  // namespace

TEST_CASE("free reduction cancels inverse pairs") {
    Word w{{{0, +1}, {0, -1}, {1, +1}}};
    CHECK(free_reduce(w) == Word{{{1, +1}}});
    CHECK(free_reduce(w).is_freely_reduced());
}

TEST_CASE("free reduction is idempotent and length-nonincreasing") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; trial++) {
        Word w = random_word(rng, 3, static_cast<int>(rng() % 50));
        Word r = free_reduce(w);
        CHECK(r.size() <= w.size());
        CHECK(free_reduce(r) == r);
        CHECK(r.is_freely_reduced());
    }
}

TEST_CASE("w * w^-1 reduces to the empty word") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        Word w = random_word(rng, 4, static_cast<int>(rng() % 50));
        CHECK(free_reduce(w.concat(w.inverse())).empty());
    }
}

TEST_CASE("cyclic reduction strips the wrap-around") {
    // a b a^-1 -> b
    Word w{{{0, +1}, {1, +1}, {0, -1}}};
    CHECK(cyclic_reduce(w) == Word{{{1, +1}}});
    CHECK(cyclic_reduce(w).is_cyclically_reduced());
}

TEST_CASE("cyclic canonical form is rotation and inversion invariant") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; trial++) {
        Word w = free_reduce(random_word(rng, 3, 12));
        if (w.empty()) continue;
        Word canon = cyclic_canonical(w);
        for (size_t k = 0; k < w.size(); k++) CHECK(cyclic_canonical(rotate(w, k)) == canon);
        CHECK(cyclic_canonical(w.inverse()) == canon);
    }
}

TEST_CASE("substitution replaces and reduces") {
    // substitute x -> y t in  x t^-1  gives y
    Word w{{{0, +1}, {1, -1}}};
    Word by{{{2, +1}, {1, +1}}};
    CHECK(substitute(w, 0, by) == Word{{{2, +1}}});
}
