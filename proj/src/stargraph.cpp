#include "fib/stargraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fib {

int weight(CornerLetter c) {
    int w = 0;
    switch (c.base) {
        case CornerBase::A: w = 1; break;
        case CornerBase::B: w = 2; break;
        case CornerBase::L: w = 0; break;
        case CornerBase::X: w = 1; break;
        case CornerBase::Y: w = 2; break;
        case CornerBase::Z: w = 3; break;
    }
    return c.sign * w;
}

int weight_mod5(CornerLetter c) { return ((weight(c) % 5) + 5) % 5; }

ShadowParity shadow_parity(CornerLetter c) {
    // underlying length even => odd number of in-region shadow edges
    switch (c.base) {
        case CornerBase::X:
        case CornerBase::Y: return ShadowParity::odd;
        default: return ShadowParity::even;
    }
}

int min_underlying_length(CornerLetter c) {
    switch (c.base) {
        case CornerBase::A:
        case CornerBase::B:
        case CornerBase::L: return 1;
        case CornerBase::X:
        case CornerBase::Y: return 2;
        case CornerBase::Z: return 3;
    }
    return 0;
}

std::string corner_str(CornerLetter c) {
    std::string s;
    switch (c.base) {
        case CornerBase::A: return c.sign > 0 ? "a~" : "a~^-1";
        case CornerBase::B: return c.sign > 0 ? "b~" : "b~^-1";
        case CornerBase::L: return c.sign > 0 ? "l~" : "mu~";
        case CornerBase::X: return c.sign > 0 ? "x" : "x^-1";
        case CornerBase::Y: return c.sign > 0 ? "y" : "y^-1";
        case CornerBase::Z: return c.sign > 0 ? "z" : "z^-1";
    }
    return s;
}

CornerLetter parse_corner(const std::string& s) {
    static const std::map<std::string, CornerLetter> table = {
        {"a~", {CornerBase::A, +1}},    {"a~^-1", {CornerBase::A, -1}},
        {"b~", {CornerBase::B, +1}},    {"b~^-1", {CornerBase::B, -1}},
        {"l~", {CornerBase::L, +1}},    {"mu~", {CornerBase::L, -1}},
        {"l~^-1", {CornerBase::L, -1}}, {"x", {CornerBase::X, +1}},
        {"x^-1", {CornerBase::X, -1}},  {"y", {CornerBase::Y, +1}},
        {"y^-1", {CornerBase::Y, -1}},  {"z", {CornerBase::Z, +1}},
        {"z^-1", {CornerBase::Z, -1}},
    };
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("unknown corner letter: " + s);
    return it->second;
}

std::vector<CornerLetter> all_corner_letters() {
    std::vector<CornerLetter> out;
    for (CornerBase b : {CornerBase::A, CornerBase::B, CornerBase::L, CornerBase::X,
                         CornerBase::Y, CornerBase::Z})
        for (int s : {+1, -1}) out.push_back({b, s});
    return out;
}

DLetter first_dletter(CornerLetter c, bool expanded) {
    switch (c.base) {
        case CornerBase::A: return c.sign > 0 ? DLetter::a : (expanded ? DLetter::lam : DLetter::a_inv);
        case CornerBase::B: return c.sign > 0 ? (expanded ? DLetter::mu : DLetter::b) : DLetter::b_inv;
        case CornerBase::L: return c.sign > 0 ? DLetter::lam : DLetter::mu;
        case CornerBase::X: return c.sign > 0 ? DLetter::a : DLetter::mu;
        case CornerBase::Y: return c.sign > 0 ? DLetter::lam : DLetter::b_inv;
        case CornerBase::Z: return c.sign > 0 ? DLetter::a : DLetter::b_inv;
    }
    return DLetter::a;
}

DLetter last_dletter(CornerLetter c, bool expanded) {
    switch (c.base) {
        case CornerBase::A: return c.sign > 0 ? (expanded ? DLetter::mu : DLetter::a) : DLetter::a_inv;
        case CornerBase::B: return c.sign > 0 ? DLetter::b : (expanded ? DLetter::lam : DLetter::b_inv);
        case CornerBase::L: return c.sign > 0 ? DLetter::lam : DLetter::mu;
        case CornerBase::X: return c.sign > 0 ? DLetter::lam : DLetter::a_inv;
        case CornerBase::Y: return c.sign > 0 ? DLetter::b : DLetter::mu;
        case CornerBase::Z: return c.sign > 0 ? DLetter::b : DLetter::a_inv;
    }
    return DLetter::a;
}

bool dletter_keeps_after(DLetter d) { return d == DLetter::b || d == DLetter::a_inv; }
bool dletter_keeps_before(DLetter d) { return d == DLetter::a || d == DLetter::b_inv; }

// from the relator cycle b [u] a [u^-1] l~ [u^-1] ... l~ [u^-1] and its inverse
int arc_after(DLetter d) {
    switch (d) {
        case DLetter::b: return +1;
        case DLetter::a: return -1;
        case DLetter::mu: return -1;
        case DLetter::lam: return +1;
        case DLetter::a_inv: return -1;
        case DLetter::b_inv: return +1;
    }
    return 0;
}

int arc_before(DLetter d) {
    switch (d) {
        case DLetter::b: return -1;
        case DLetter::a: return +1;
        case DLetter::mu: return -1;
        case DLetter::lam: return +1;
        case DLetter::a_inv: return +1;
        case DLetter::b_inv: return -1;
    }
    return 0;
}

namespace {

bool cancels(DLetter p, DLetter q) {
    return (p == DLetter::a && q == DLetter::a_inv) || (p == DLetter::a_inv && q == DLetter::a) ||
           (p == DLetter::b && q == DLetter::b_inv) || (p == DLetter::b_inv && q == DLetter::b);
}

}  // namespace

bool junction_allowed(CornerLetter c1, CornerLetter c2) {
    if (c2 == c1.inverse()) return false;  // reduced reading
    // both k = 0 and k >= 1 word shapes at the junction must survive
    for (bool e1 : {false, true})
        for (bool e2 : {false, true}) {
            DLetter p = last_dletter(c1, e1);
            DLetter q = first_dletter(c2, e2);
            if (cancels(p, q)) return false;
            if (!dletter_keeps_after(p) && !dletter_keeps_before(q)) return false;
            if (arc_after(p) + arc_before(q) != 0) return false;
        }
    return true;
}

std::vector<std::pair<CornerLetter, CornerLetter>> catalogued_forbidden_pairs() {
    auto c = [](const std::string& s) { return parse_corner(s); };
    std::vector<std::pair<CornerLetter, CornerLetter>> base = {
        {c("a~"), c("l~")},      {c("a~"), c("y")},      {c("a~^-1"), c("x")},
        {c("a~^-1"), c("z")},    {c("b~"), c("y^-1")},   {c("b~"), c("z^-1")},
        {c("b~^-1"), c("x^-1")}, {c("b~^-1"), c("mu~")}, {c("l~"), c("x^-1")},
        {c("l~"), c("mu~")},     {c("mu~"), c("y")},     {c("mu~"), c("l~")},
        {c("x^-1"), c("z")},     {c("y"), c("z^-1")},
    };
    std::set<std::pair<CornerLetter, CornerLetter>> closed;
    for (auto [p, q] : base) {
        closed.insert({p, q});
        closed.insert({q.inverse(), p.inverse()});
    }
    return {closed.begin(), closed.end()};
}

std::vector<ForbiddenPair> derive_forbidden_pairs() {
    std::vector<ForbiddenPair> out;
    for (CornerLetter c1 : all_corner_letters())
        for (CornerLetter c2 : all_corner_letters()) {
            if (junction_allowed(c1, c2)) continue;
            // c2 == c1^-1 is plain free reduction except for the l~/mu~ pair,
            // which the catalogue lists explicitly
            if (c2 == c1.inverse() && c1.base != CornerBase::L) continue;
            ForbiddenPair fp{c1, c2, ""};
            DLetter p = last_dletter(c1, true);
            DLetter q = first_dletter(c2, true);
            if (cancels(last_dletter(c1, false), first_dletter(c2, false)))
                fp.witness = "forces an a a^-1 or b b^-1 corner pair in a reduced diagram";
            else if (c1.base == CornerBase::L && c2.base == CornerBase::L)
                fp.witness = "concatenation collapses to a (lambda mu)-power, which cannot label a corner";
            else if (!dletter_keeps_after(p) && !dletter_keeps_before(q)) {
                // when the merged word matches a single corner pattern, name it
                std::string merged;
                if (c1.base == CornerBase::A && c2.base == CornerBase::L && c1.sign > 0 && c2.sign > 0)
                    merged = "x";
                else if (c1.base == CornerBase::A && c2.base == CornerBase::Y && c1.sign > 0 && c2.sign > 0)
                    merged = "z";
                else if (c1.base == CornerBase::L && c2.base == CornerBase::X && c2.sign < 0 && c1.sign > 0)
                    merged = "a~^-1";
                else if (c1.base == CornerBase::L && c2.base == CornerBase::Y && c1.sign < 0 && c2.sign > 0)
                    merged = "b~";
                else if (c1.base == CornerBase::B && c2.base == CornerBase::L && c1.sign < 0 && c2.sign < 0)
                    merged = "y^-1";
                else if (c1.base == CornerBase::B && c2.base == CornerBase::X && c1.sign < 0 && c2.sign < 0)
                    merged = "z^-1";
                else if (c1.base == CornerBase::X && c2.base == CornerBase::B && c1.sign > 0 && c2.sign > 0)
                    merged = "z";
                else if (c1.base == CornerBase::X && c2.base == CornerBase::L && c1.sign > 0 && c2.sign < 0)
                    merged = "a~";
                else if (c1.base == CornerBase::Y && c2.base == CornerBase::L && c1.sign < 0 && c2.sign > 0)
                    merged = "b~^-1";
                else if (c1.base == CornerBase::L && c2.base == CornerBase::A && c1.sign < 0 && c2.sign < 0)
                    merged = "x^-1";
                if (!merged.empty())
                    fp.witness = "rewrites to " + merged;
                else
                    fp.witness = "junction edge cannot be a (b,a)-edge of either region";
            }
            out.push_back(fp);
        }
    return out;
}

int VertexLabel::weight_mod5() const {
    int w = 0;
    for (CornerLetter c : letters) w += weight(c);
    return ((w % 5) + 5) % 5;
}

bool VertexLabel::reduced() const {
    size_t n = letters.size();
    if (n < 2) return true;
    for (size_t i = 0; i < n; i++)
        if (letters[(i + 1) % n] == letters[i].inverse()) return false;
    return true;
}

bool VertexLabel::admissible() const {
    size_t n = letters.size();
    if (n < 2) return false;
    for (size_t i = 0; i < n; i++)
        if (!junction_allowed(letters[i], letters[(i + 1) % n])) return false;
    return weight_mod5() == 0;
}

VertexLabel VertexLabel::inverse() const {
    VertexLabel r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(it->inverse());
    return r;
}

VertexLabel VertexLabel::canonical() const {
    if (letters.empty()) return *this;
    VertexLabel best = *this;
    for (const VertexLabel& base : {*this, inverse()}) {
        for (size_t k = 0; k < base.letters.size(); k++) {
            VertexLabel cand;
            cand.letters.insert(cand.letters.end(), base.letters.begin() + k, base.letters.end());
            cand.letters.insert(cand.letters.end(), base.letters.begin(), base.letters.begin() + k);
            if (cand < best) best = cand;
        }
    }
    return best;
}

std::string VertexLabel::str() const {
    std::string s;
    for (size_t i = 0; i < letters.size(); i++) {
        if (i) s += ' ';
        s += corner_str(letters[i]);
    }
    return s;
}

VertexLabel VertexLabel::parse(const std::string& s) {
    VertexLabel v;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find(' ', i);
        if (j == std::string::npos) j = s.size();
        if (j > i) v.letters.push_back(parse_corner(s.substr(i, j - i)));
        i = j + 1;
    }
    return v;
}

std::vector<VertexLabel> enumerate_vertex_labels(int degree, int modulus) {
    if (degree < 2) throw std::invalid_argument("degree must be at least 2");
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    std::vector<CornerLetter> alphabet = all_corner_letters();
    std::set<VertexLabel> found;
    std::vector<CornerLetter> cur(degree, alphabet[0]);
    // DFS over words with allowed junctions; canonical dedup at the end
    auto rec = [&](auto&& self, int pos, int wsum) -> void {
        if (pos == degree) {
            if (junction_allowed(cur[degree - 1], cur[0]) && ((wsum % modulus) + modulus) % modulus == 0)
                found.insert(VertexLabel{cur}.canonical());
            return;
        }
        for (CornerLetter c : alphabet) {
            if (pos > 0 && !junction_allowed(cur[pos - 1], c)) continue;
            cur[pos] = c;
            self(self, pos + 1, wsum + weight(c));
        }
    };
    rec(rec, 0, 0);
    return {found.begin(), found.end()};
}

}  // namespace fib
