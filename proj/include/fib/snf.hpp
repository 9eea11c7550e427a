#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "fib/presentation.hpp"

namespace fib {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix for abelianization work. Entries grow quickly during
// elimination of circulant relation matrices, hence arbitrary precision.
struct IntegerMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<BigInt> a;

    IntegerMatrix() = default;
    IntegerMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

    BigInt& at(size_t r, size_t c) { return a[r * cols + c]; }
    const BigInt& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

// Diagonal d_1 | d_2 | ... | d_k, each d_i >= 0, via unimodular row/column
// operations pivoting on the smallest nonzero entry.
std::vector<BigInt> smith_normal_form(IntegerMatrix m);

// Invariant factors of Z^gens / rowspace(exponent matrix): the nonunit
// diagonal entries, with one 0 per free rank.
std::vector<BigInt> abelian_invariants(const IntegerMatrix& relation_matrix);

IntegerMatrix exponent_matrix(const Presentation& p);

// Nonunit invariant factors of the abelianized group (0 = infinite cyclic).
std::vector<BigInt> abelianization(const Presentation& p);

}  // namespace fib
