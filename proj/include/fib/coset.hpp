#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fib/presentation.hpp"

namespace fib {

enum class CosetStrategy { hlt, felsch };

// Enumeration over the trivial subgroup. Closing proves the group finite and
// counts its elements; hitting the budget proves nothing (Overflow is an
// outcome, not an error).
struct CosetResult {
    enum class Status { finite, overflow } status;
    std::int64_t order = 0;          // live cosets on close
    std::int64_t cosets_defined = 0; // total allocated, dead ones included
    double millis = 0.0;
};

// Coset table with one column per signed generator. Rows are created lazily;
// coincidences are merged union-find style and every stored edge keeps its
// inverse edge in sync.
class CosetTable {
  public:
    CosetTable(int ngens, std::vector<Word> relators, std::int64_t max_cosets);

    CosetResult::Status enumerate(CosetStrategy strategy);

    std::int64_t live_count() const;
    std::int64_t defined_count() const { return defined_; }

    // Post-closure audit: every relator traces to its starting coset from
    // every live coset and the table is closed under inverses.
    bool audit() const;

  private:
    static int col(Letter l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }
    static int inv_col(int c) { return c ^ 1; }

    std::int64_t get(std::int64_t coset, int c) const { return table_[coset * ncols_ + c]; }
    void set(std::int64_t coset, int c, std::int64_t to) { table_[coset * ncols_ + c] = to; }

    std::int64_t rep(std::int64_t c);
    std::int64_t new_coset();
    void join(std::int64_t a, std::int64_t b);
    void process_coincidences();
    void deduce(std::int64_t from, int c, std::int64_t to);
    void compress();  // rewrites live rows through rep() once enumeration closes

    // scan relator r from coset c; fill_gap defines new cosets HLT-style
    bool scan(std::int64_t c, const Word& r, bool fill_gap);
    void scan_at_deductions();

    int ngens_;
    int ncols_;
    std::vector<Word> relators_;
    std::int64_t max_cosets_;
    std::int64_t defined_ = 0;
    std::vector<std::int64_t> table_;   // -1 = undefined
    std::vector<std::int64_t> parent_;  // union-find; parent_[c] == c means live
    std::vector<std::pair<std::int64_t, std::int64_t>> coincidence_queue_;
    std::vector<std::pair<std::int64_t, int>> deduction_stack_;
    // occurrences of each column in each relator, for Felsch deduction scans
    std::vector<std::vector<std::pair<int, int>>> occurrences_;
    bool overflowed_ = false;
};

CosetResult coset_enumerate(const Presentation& p, std::int64_t max_cosets = 200000,
                            CosetStrategy strategy = CosetStrategy::hlt);

// One Theorem-style order check: enumerate F(r,n) and compare exactly.
struct OrderCase {
    int r;
    int n;
    std::int64_t expected;
};

struct OrderCaseResult {
    OrderCase c;
    CosetResult enumeration;
    bool pass = false;
};

std::vector<OrderCase> finite_fibonacci_cases();
std::vector<OrderCaseResult> verify_finite_orders(const std::vector<OrderCase>& cases,
                                                  std::int64_t max_cosets = 200000,
                                                  CosetStrategy strategy = CosetStrategy::hlt);

}  // namespace fib
