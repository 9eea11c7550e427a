#pragma once

#include <string>
#include <vector>

#include "fib/word.hpp"

namespace fib {

// Corner alphabet of the amended diagram. Each letter stands for a word over
// the diagram corners {a, b, lambda, mu}:
//
//   A  (a~)      a (lm)^k          weight 1, odd length
//   B  (b~)      (ml)^k b          weight 2, odd length
//   L  (l~)      (lm)^k l          weight 0, odd length
//   X            a (lm)^k l        weight 1, even length
//   Y             l (ml)^k b       weight 2, even length
//   Z            a (lm)^k1 l (ml)^k2 b   weight 3, odd length
//
// mu~ is the inverse traversal of l~ and is rendered (L, -1).
enum class CornerBase { A, B, L, X, Y, Z };

struct CornerLetter {
    CornerBase base;
    int sign = +1;

    CornerLetter inverse() const { return {base, -sign}; }
    friend bool operator==(CornerLetter a, CornerLetter b) {
        return a.base == b.base && a.sign == b.sign;
    }
    friend bool operator!=(CornerLetter a, CornerLetter b) { return !(a == b); }
    friend bool operator<(CornerLetter a, CornerLetter b) {
        return a.base != b.base ? a.base < b.base : a.sign < b.sign;
    }
};

int weight(CornerLetter c);          // signed weight
int weight_mod5(CornerLetter c);     // in 0..4
enum class ShadowParity { odd, even };
// parity of the number of in-region shadow edges at a vertex carrying c
ShadowParity shadow_parity(CornerLetter c);
// minimal length of the underlying corner word (1, 2 or 3)
int min_underlying_length(CornerLetter c);

std::string corner_str(CornerLetter c);                 // "a~", "mu~", "x^-1", ...
CornerLetter parse_corner(const std::string& s);
std::vector<CornerLetter> all_corner_letters();         // the 12 signed letters

// Underlying single corners of the original diagram, for junction analysis.
enum class DLetter { a, a_inv, b, b_inv, lam, mu };

// First/last underlying corner of c's word; `expanded` selects k >= 1 where
// the word shape depends on it.
DLetter first_dletter(CornerLetter c, bool expanded);
DLetter last_dletter(CornerLetter c, bool expanded);

// An edge of the amended diagram survives only if one of its sides can be the
// (b,a)-edge of its region; in terms of the corners flanking the edge at one
// endpoint (clockwise reading) that means:
//   previous corner in {b, a^-1}  or  next corner in {a, b^-1}.
bool dletter_keeps_after(DLetter d);
bool dletter_keeps_before(DLetter d);

// u-arc exponents around a corner in its own region's reading: the arc leaving
// the corner (arc_after) and the arc arriving at it (arc_before). The two
// regions sharing the arc at a junction traverse it in opposite directions, so
// arc_after(previous) + arc_before(next) = 0 there.
int arc_after(DLetter d);
int arc_before(DLetter d);

// Whether corner c2 may follow c1 (clockwise) in a vertex label: the junction
// edge must be keepable, reading must stay reduced, and the junction must not
// force an a a^-1 / b b^-1 corner pair.
bool junction_allowed(CornerLetter c1, CornerLetter c2);

struct ForbiddenPair {
    CornerLetter first, second;
    std::string witness;
};

// All ordered letter pairs excluded beyond plain free reduction, each with the
// reason: a forced cancellation, a collapse to a single corner letter or a
// (lambda mu)-power, or a junction edge that no region could keep.
std::vector<ForbiddenPair> derive_forbidden_pairs();

// The fourteen pairs (closed under inversion) that the degree-<6 label
// catalogue singles out; a strict subset of derive_forbidden_pairs().
std::vector<std::pair<CornerLetter, CornerLetter>> catalogued_forbidden_pairs();

// Cyclic corner word; canonical form is the least rotation of the word or of
// its inverse.
struct VertexLabel {
    std::vector<CornerLetter> letters;

    int weight_mod5() const;
    bool reduced() const;             // no inverse pair, including wrap-around
    bool admissible() const;          // reduced + all junctions allowed + weight 0
    VertexLabel inverse() const;
    VertexLabel canonical() const;
    std::string str() const;

    friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
        return a.letters == b.letters;
    }
    friend bool operator<(const VertexLabel& a, const VertexLabel& b) {
        return a.letters < b.letters;
    }

    static VertexLabel parse(const std::string& s);  // space-separated corners
};

// All canonical admissible labels of the given degree, sorted. The exponent
// sum must vanish mod `modulus` (5 for the coefficient group at hand).
std::vector<VertexLabel> enumerate_vertex_labels(int degree, int modulus = 5);

}  // namespace fib
