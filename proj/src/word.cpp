#include "fib/word.hpp"

#include <algorithm>

namespace fib {

Word Word::inverse() const {
    Word r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(it->inverse());
    return r;
}

Word Word::concat(const Word& o) const {
    Word r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

Word Word::power(Letter g, std::int64_t exp) {
    Word r;
    Letter l = exp >= 0 ? g : g.inverse();
    std::int64_t n = exp >= 0 ? exp : -exp;
    r.letters.assign(static_cast<size_t>(n), l);
    return r;
}

bool Word::is_freely_reduced() const {
    for (size_t i = 0; i + 1 < letters.size(); i++)
        if (letters[i + 1] == letters[i].inverse()) return false;
    return true;
}

bool Word::is_cyclically_reduced() const {
    if (!is_freely_reduced()) return false;
    if (letters.size() >= 2 && letters.front() == letters.back().inverse()) return false;
    return true;
}

Word free_reduce(const Word& w) {
    Word r;
    for (Letter l : w.letters) {
        if (!r.letters.empty() && r.letters.back() == l.inverse())
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t lo = 0, hi = r.letters.size();
    while (hi - lo >= 2 && r.letters[lo] == r.letters[hi - 1].inverse()) {
        lo++;
        hi--;
    }
    return Word(std::vector<Letter>(r.letters.begin() + lo, r.letters.begin() + hi));
}

Word rotate(const Word& w, size_t k) {
    if (w.letters.empty()) return w;
    k %= w.letters.size();
    Word r;
    r.letters.insert(r.letters.end(), w.letters.begin() + k, w.letters.end());
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + k);
    return r;
}

Word substitute(const Word& w, int gen, const Word& by) {
    Word r;
    Word by_inv = by.inverse();
    for (Letter l : w.letters) {
        const Word& rep = (l.gen == gen) ? (l.sign > 0 ? by : by_inv) : Word();
        if (l.gen == gen)
            r.letters.insert(r.letters.end(), rep.letters.begin(), rep.letters.end());
        else
            r.letters.push_back(l);
    }
    return free_reduce(r);
}

Word cyclic_canonical(const Word& w) {
    Word c = cyclic_reduce(w);
    if (c.empty()) return c;
    Word best = c;
    for (const Word& base : {c, c.inverse()}) {
        for (size_t k = 0; k < base.letters.size(); k++) {
            Word cand = rotate(base, k);
            if (cand < best) best = cand;
        }
    }
    return best;
}

}  // namespace fib
