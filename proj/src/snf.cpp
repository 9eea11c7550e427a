#include "fib/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace fib {

namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// smallest nonzero |entry| in the trailing submatrix starting at (k,k)
bool find_pivot(const IntegerMatrix& m, size_t k, size_t& pr, size_t& pc) {
    bool found = false;
    BigInt best = 0;
    for (size_t r = k; r < m.rows; r++)
        for (size_t c = k; c < m.cols; c++) {
            const BigInt& v = m.at(r, c);
            if (v == 0) continue;
            BigInt av = big_abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pr = r;
                pc = c;
            }
        }
    return found;
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
    size_t n = std::min(m.rows, m.cols);
    std::vector<BigInt> diag;
    for (size_t k = 0; k < n; k++) {
        size_t pr = k, pc = k;
        if (!find_pivot(m, k, pr, pc)) break;
        for (size_t c = 0; c < m.cols; c++) std::swap(m.at(k, c), m.at(pr, c));
        for (size_t r = 0; r < m.rows; r++) std::swap(m.at(r, k), m.at(r, pc));
        while (true) {
            // clear column k by row operations; a nonzero remainder becomes
            // the new, strictly smaller pivot
            bool again = false;
            for (size_t r = k + 1; r < m.rows; r++) {
                if (m.at(r, k) == 0) continue;
                BigInt q = m.at(r, k) / m.at(k, k);
                for (size_t c = k; c < m.cols; c++) m.at(r, c) -= q * m.at(k, c);
                if (m.at(r, k) != 0) {
                    for (size_t c = k; c < m.cols; c++) std::swap(m.at(r, c), m.at(k, c));
                    again = true;
                }
            }
            if (again) continue;
            for (size_t c = k + 1; c < m.cols; c++) {
                if (m.at(k, c) == 0) continue;
                BigInt q = m.at(k, c) / m.at(k, k);
                for (size_t r = k; r < m.rows; r++) m.at(r, c) -= q * m.at(r, k);
                if (m.at(k, c) != 0) {
                    for (size_t r = k; r < m.rows; r++) std::swap(m.at(r, c), m.at(r, k));
                    again = true;
                }
            }
            if (!again) break;
        }
        // pivot must divide the rest of the submatrix for the divisibility
        // chain; fold an offending row in and redo this step
        bool redo = false;
        for (size_t r = k + 1; r < m.rows && !redo; r++)
            for (size_t c = k + 1; c < m.cols && !redo; c++)
                if (m.at(r, c) % m.at(k, k) != 0) {
                    for (size_t cc = k; cc < m.cols; cc++) m.at(k, cc) += m.at(r, cc);
                    redo = true;
                }
        if (redo) {
            k--;
            continue;
        }
        diag.push_back(big_abs(m.at(k, k)));
    }
    return diag;
}

std::vector<BigInt> abelian_invariants(const IntegerMatrix& relation_matrix) {
    std::vector<BigInt> diag = smith_normal_form(relation_matrix);
    std::vector<BigInt> out;
    for (const BigInt& d : diag) {
        if (d == 0) throw std::logic_error("zero pivot in smith diagonal");
        if (d != 1) out.push_back(d);
    }
    size_t rank = diag.size();
    for (size_t i = rank; i < relation_matrix.cols; i++) out.push_back(0);
    return out;
}

IntegerMatrix exponent_matrix(const Presentation& p) {
    IntegerMatrix m(p.relators.size(), p.generators.size());
    for (size_t r = 0; r < p.relators.size(); r++)
        for (Letter l : p.relators[r].letters) m.at(r, static_cast<size_t>(l.gen)) += l.sign;
    return m;
}

std::vector<BigInt> abelianization(const Presentation& p) {
    p.check();
    return abelian_invariants(exponent_matrix(p));
}

}  // namespace fib
