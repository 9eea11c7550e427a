#include "fib/coset.hpp"

#include <chrono>
#include <stdexcept>

namespace fib {

CosetTable::CosetTable(int ngens, std::vector<Word> relators, std::int64_t max_cosets)
    : ngens_(ngens), ncols_(2 * ngens), relators_(std::move(relators)), max_cosets_(max_cosets) {
    if (max_cosets_ < 1) throw std::invalid_argument("max_cosets must be positive");
    occurrences_.resize(ncols_);
    for (size_t ri = 0; ri < relators_.size(); ri++) {
        const Word& r = relators_[ri];
        for (size_t i = 0; i < r.letters.size(); i++)
            occurrences_[col(r.letters[i])].push_back({static_cast<int>(ri), static_cast<int>(i)});
    }
    new_coset();
}

std::int64_t CosetTable::rep(std::int64_t c) {
    while (parent_[c] != c) {
        parent_[c] = parent_[parent_[c]];
        c = parent_[c];
    }
    return c;
}

std::int64_t CosetTable::new_coset() {
    if (defined_ >= max_cosets_) {
        overflowed_ = true;
        return -1;
    }
    std::int64_t c = defined_++;
    table_.resize(table_.size() + ncols_, -1);
    parent_.push_back(c);
    return c;
}

void CosetTable::join(std::int64_t a, std::int64_t b) {
    coincidence_queue_.push_back({a, b});
    process_coincidences();
}

void CosetTable::process_coincidences() {
    while (!coincidence_queue_.empty()) {
        auto [a, b] = coincidence_queue_.back();
        coincidence_queue_.pop_back();
        a = rep(a);
        b = rep(b);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        parent_[b] = a;  // b is dead from here on; rep() resolves stale edges
        for (int c = 0; c < ncols_; c++) {
            std::int64_t t = get(b, c);
            if (t < 0) continue;
            set(b, c, -1);
            std::int64_t tr = rep(t);
            std::int64_t ar = rep(a);
            std::int64_t existing = get(ar, c) >= 0 ? rep(get(ar, c)) : -1;
            if (existing >= 0 && existing != tr) {
                coincidence_queue_.push_back({existing, tr});
            } else {
                set(ar, c, tr);
                std::int64_t back = get(tr, inv_col(c)) >= 0 ? rep(get(tr, inv_col(c))) : -1;
                if (back >= 0 && back != ar)
                    coincidence_queue_.push_back({back, ar});
                else
                    set(tr, inv_col(c), ar);
                deduction_stack_.push_back({ar, c});
            }
        }
    }
}

void CosetTable::deduce(std::int64_t from, int c, std::int64_t to) {
    from = rep(from);
    to = rep(to);
    std::int64_t cur = get(from, c) >= 0 ? rep(get(from, c)) : -1;
    if (cur >= 0) {
        if (cur != to) join(cur, to);
        return;
    }
    set(from, c, to);
    std::int64_t back = get(to, inv_col(c)) >= 0 ? rep(get(to, inv_col(c))) : -1;
    if (back >= 0 && back != from) {
        deduction_stack_.push_back({from, c});
        join(back, from);
    } else {
        set(to, inv_col(c), from);
        deduction_stack_.push_back({from, c});
        process_coincidences();
    }
}

// Scans relator r from coset `start`. Without fill_gap this only applies
// whatever deduction or coincidence the current edges force. With fill_gap it
// keeps defining cosets until the cycle closes (HLT); every definition or
// coincidence restarts the trace from scratch, so positions can never go
// stale.
bool CosetTable::scan(std::int64_t start, const Word& r, bool fill_gap) {
    size_t n = r.letters.size();
    if (n == 0) return true;
    while (true) {
        std::int64_t c = rep(start);
        size_t f = 0;
        std::int64_t front = c;
        while (f < n) {
            std::int64_t nxt = get(front, col(r.letters[f]));
            if (nxt < 0) break;
            front = rep(nxt);
            f++;
        }
        if (f == n) {
            if (front != c) {
                join(front, c);
                if (fill_gap) continue;
            }
            return true;
        }
        size_t b = n;
        std::int64_t back = c;
        while (b > f) {
            std::int64_t nxt = get(back, inv_col(col(r.letters[b - 1])));
            if (nxt < 0) break;
            back = rep(nxt);
            b--;
        }
        if (b == f) {
            join(front, back);
            if (fill_gap) continue;
            return true;
        }
        if (b == f + 1) {
            deduce(front, col(r.letters[f]), back);
            if (fill_gap) continue;
            return true;
        }
        if (!fill_gap) return true;
        std::int64_t fresh = new_coset();
        if (fresh < 0) return false;
        deduce(front, col(r.letters[f]), fresh);
    }
}

void CosetTable::scan_at_deductions() {
    while (!deduction_stack_.empty()) {
        auto [c, cl] = deduction_stack_.back();
        deduction_stack_.pop_back();
        if (rep(c) != c) continue;
        for (auto [ri, pos] : occurrences_[cl]) {
            const Word& r = relators_[ri];
            // walk back to the relator start, then scan the whole cycle
            std::int64_t start = c;
            bool ok = true;
            for (int i = pos - 1; i >= 0; i--) {
                std::int64_t nxt = get(start, inv_col(col(r.letters[i])));
                if (nxt < 0) {
                    ok = false;
                    break;
                }
                start = rep(nxt);
            }
            if (ok) scan(start, r, false);
            if (rep(c) != c) break;
        }
    }
}

CosetResult::Status CosetTable::enumerate(CosetStrategy strategy) {
    if (strategy == CosetStrategy::hlt) {
        for (std::int64_t c = 0; c < defined_; c++) {
            if (rep(c) != c) continue;
            for (const Word& r : relators_) {
                if (!scan(c, r, true)) return CosetResult::Status::overflow;
                if (rep(c) != c) break;
            }
            scan_at_deductions();  // chase consequences before defining more
            if (rep(c) != c) continue;
            for (int cl = 0; cl < ncols_; cl++) {
                if (rep(c) != c) break;
                if (get(c, cl) < 0) {
                    std::int64_t fresh = new_coset();
                    if (fresh < 0) return CosetResult::Status::overflow;
                    deduce(c, cl, fresh);
                }
            }
        }
        compress();
        return CosetResult::Status::finite;
    }
    // Felsch: define one edge at a time, then close under deductions
    scan_at_deductions();
    std::int64_t c = 0;
    while (true) {
        while (c < defined_ && rep(c) != c) c++;
        if (c >= defined_) break;
        int cl = 0;
        while (cl < ncols_ && get(c, cl) >= 0) cl++;
        if (cl == ncols_) {
            c++;
            continue;
        }
        std::int64_t fresh = new_coset();
        if (fresh < 0) return CosetResult::Status::overflow;
        deduce(c, cl, fresh);
        scan_at_deductions();
    }
    compress();
    return CosetResult::Status::finite;
}

void CosetTable::compress() {
    for (std::int64_t c = 0; c < defined_; c++) {
        if (rep(c) != c) continue;
        for (int cl = 0; cl < ncols_; cl++)
            if (get(c, cl) >= 0) set(c, cl, rep(get(c, cl)));
    }
}

std::int64_t CosetTable::live_count() const {
    std::int64_t n = 0;
    for (std::int64_t c = 0; c < defined_; c++)
        if (parent_[c] == c) n++;
    return n;
}

bool CosetTable::audit() const {
    for (std::int64_t c = 0; c < defined_; c++) {
        if (parent_[c] != c) continue;
        for (int cl = 0; cl < ncols_; cl++) {
            std::int64_t t = get(c, cl);
            if (t < 0 || parent_[t] != t) return false;
            if (get(t, inv_col(cl)) != c) return false;
        }
        for (const Word& r : relators_) {
            std::int64_t cur = c;
            for (Letter l : r.letters) {
                cur = get(cur, col(l));
                if (cur < 0) return false;
            }
            if (cur != c) return false;
        }
    }
    return true;
}

CosetResult coset_enumerate(const Presentation& p, std::int64_t max_cosets,
                            CosetStrategy strategy) {
    p.check();
    auto t0 = std::chrono::steady_clock::now();
    CosetTable table(static_cast<int>(p.generators.size()), p.relators, max_cosets);
    CosetResult res;
    res.status = table.enumerate(strategy);
    if (res.status == CosetResult::Status::finite) {
        if (!table.audit()) throw std::logic_error("coset table failed its closure audit");
        res.order = table.live_count();
    }
    res.cosets_defined = table.defined_count();
    auto t1 = std::chrono::steady_clock::now();
    res.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return res;
}

std::vector<OrderCase> finite_fibonacci_cases() {
    return {
        {2, 2, 1},  {2, 3, 8},    {2, 4, 5},  {2, 5, 11},
        {2, 7, 29}, {3, 2, 8},    {3, 3, 2},  {3, 5, 22},
        {3, 6, 1512}, {4, 4, 3},  {5, 4, 624}, {6, 4, 125},
    };
}

std::vector<OrderCaseResult> verify_finite_orders(const std::vector<OrderCase>& cases,
                                                  std::int64_t max_cosets,
                                                  CosetStrategy strategy) {
    std::vector<OrderCaseResult> out;
    for (const OrderCase& c : cases) {
        OrderCaseResult r;
        r.c = c;
        r.enumeration = coset_enumerate(build_fibonacci(c.r, c.n), max_cosets, strategy);
        r.pass = r.enumeration.status == CosetResult::Status::finite &&
                 r.enumeration.order == c.expected;
        out.push_back(r);
    }
    return out;
}

}  // namespace fib
