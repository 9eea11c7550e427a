#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fib {

// A letter is a generator index with a sign; words are kept freely reduced by
// the constructors that matter (relators, substitution results).
struct Letter {
    int gen = 0;
    int sign = 1;  // +1 or -1

    Letter inverse() const { return {gen, -sign}; }
    friend bool operator==(Letter a, Letter b) { return a.gen == b.gen && a.sign == b.sign; }
    friend bool operator!=(Letter a, Letter b) { return !(a == b); }
    friend bool operator<(Letter a, Letter b) {
        return a.gen != b.gen ? a.gen < b.gen : a.sign < b.sign;
    }
};

struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word inverse() const;
    Word concat(const Word& o) const;
    static Word power(Letter g, std::int64_t exp);  // g^exp, exp may be negative

    bool is_freely_reduced() const;
    bool is_cyclically_reduced() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);
// Also strips inverse pairs across the wrap-around.
Word cyclic_reduce(const Word& w);
Word rotate(const Word& w, size_t k);
// Replaces every occurrence of generator `gen` by `by` (inverted occurrences
// get the inverse), then freely reduces.
Word substitute(const Word& w, int gen, const Word& by);

// Canonical representative of {rotations of w} U {rotations of w^-1};
// used when relators are compared up to cyclic permutation and inversion.
Word cyclic_canonical(const Word& w);

}  // namespace fib
