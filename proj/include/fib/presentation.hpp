#pragma once

#include <string>
#include <vector>

#include "fib/word.hpp"

namespace fib {

// Finite presentation with named generators. Relators are stored cyclically
// reduced; words reference generators by index into `generators`.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int gen_index(const std::string& name) const;  // -1 if absent
    int require_gen(const std::string& name) const;
    int add_generator(const std::string& name);
    void add_relator(Word w);  // cyclically reduces, checks letters
    void check() const;

    std::string letter_str(Letter l) const;
    std::string word_str(const Word& w) const;  // "x1 x2 x3^-1"
    std::string str() const;                    // "gens:" header plus one relator per line

    // Equality up to cyclic permutation/inversion of relators, as multisets.
    // Generator lists must match exactly (renaming is an explicit script step).
    bool equivalent(const Presentation& o) const;

    static Presentation parse(const std::string& text);
};

// Relative presentation <G, x | r> with G = <coefficient gens | coefficient
// relators>; mixed relators live in the free product.
struct RelativePresentation {
    Presentation coefficient;            // e.g. <t | t^5>
    std::vector<std::string> extra_gens; // e.g. {u}
    std::vector<Word> mixed_relators;    // over coefficient gens + extra gens

    // all generators, coefficient first; mixed relators index into this
    std::vector<std::string> all_generators() const;
    Presentation flatten() const;  // plain two-generator presentation
};

// F(r,n): n generators, relator i is x_i x_{i+1} ... x_{i+r-1} x_{i+r}^{-1}
// with 1-based subscripts mod n.
Presentation build_fibonacci(int r, int n);

// P_n = <t, u | t^5, t^2 u t u^-n>.  n < 7 is allowed for experiments; the
// flag reports whether the asphericity range was left.
RelativePresentation build_relative_pn(int n, bool* below_range = nullptr);

enum class ExtensionFamily { seven, eight };

// E(7+5k,5) = <x,t | t^5, (x t^-1)^(7+5k) x^-1 t^2>,
// E(8+5k,5) = <x,t | t^5, (x t^-1)^(8+5k) x^-1 t^3>.
Presentation build_extension(int k, ExtensionFamily family);

// Parses "x1 x2^-1 t" against a generator list.
Word parse_word(const Presentation& p, const std::string& text);

}  // namespace fib
