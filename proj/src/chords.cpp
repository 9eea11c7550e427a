#include "fib/chords.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fib {

void ChordConfig::normalize() {
    for (auto& [p, q] : chords) {
        if (p > q) std::swap(p, q);
    }
    std::sort(chords.begin(), chords.end());
}

bool ChordConfig::well_formed() const {
    if (m < 3) return false;
    for (auto [p, q] : chords)
        if (p < 0 || q < 0 || p >= m || q >= m || p == q) return false;
    return true;
}

bool ChordConfig::has_duplicate_chord() const {
    for (size_t i = 0; i + 1 < chords.size(); i++)
        if (chords[i] == chords[i + 1]) return true;
    return false;
}

bool ChordConfig::has_crossing() const {
    for (size_t i = 0; i < chords.size(); i++)
        for (size_t j = i + 1; j < chords.size(); j++) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            // strict interleaving a < c < b < d or c < a < d < b
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return true;
        }
    return false;
}

ChordConfig ChordConfig::canonical() const {
    ChordConfig best = *this;
    best.normalize();
    for (int refl = 0; refl < 2; refl++)
        for (int r = 0; r < m; r++) {
            ChordConfig img;
            img.m = m;
            for (auto [p, q] : chords) {
                int pp = refl ? (m - p) % m : p;
                int qq = refl ? (m - q) % m : q;
                img.chords.push_back({(pp + r) % m, (qq + r) % m});
            }
            img.normalize();
            if (img.chords < best.chords) best = img;
        }
    return best;
}

std::string ChordConfig::str() const {
    if (chords.empty()) return "()";
    std::string s;
    for (auto [p, q] : chords) {
        s += "(" + std::to_string(p + 1);
        s += (p + 1 >= 10 || q + 1 >= 10) ? " " : "";
        s += std::to_string(q + 1) + ")";
    }
    return s;
}

ChordConfig ChordConfig::parse(int m, const std::string& text) {
    ChordConfig c;
    c.m = m;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in chord list");
        size_t j = text.find(')', i);
        if (j == std::string::npos) throw std::invalid_argument("unbalanced chord list");
        std::string body = text.substr(i + 1, j - i - 1);
        int p, q;
        size_t space = body.find(' ');
        if (space != std::string::npos) {
            p = std::stoi(body.substr(0, space));
            q = std::stoi(body.substr(space + 1));
        } else if (body.size() == 2) {
            p = body[0] - '0';
            q = body[1] - '0';
        } else if (body.empty()) {
            i = j + 1;
            continue;
        } else {
            throw std::invalid_argument("chord endpoints need a separator: " + body);
        }
        c.chords.push_back({p - 1, q - 1});
        i = j + 1;
    }
    c.normalize();
    if (!c.well_formed()) throw std::invalid_argument("malformed chord config");
    return c;
}

int Face::boundary_edge_count() const {
    int n = 0;
    for (const FaceStep& s : steps)
        if (!s.is_chord) n++;
    return n;
}

std::vector<int> Face::chord_ids() const {
    std::vector<int> out;
    for (const FaceStep& s : steps)
        if (s.is_chord) out.push_back(s.id);
    return out;
}

std::vector<std::vector<int>> chords_at_vertices(const ChordConfig& c) {
    std::vector<std::vector<int>> at(c.m);
    for (size_t i = 0; i < c.chords.size(); i++) {
        at[c.chords[i].first].push_back(static_cast<int>(i));
        at[c.chords[i].second].push_back(static_cast<int>(i));
    }
    // clockwise from edge (v, v+1): increasing anticlockwise distance of the
    // far endpoint
    for (int v = 0; v < c.m; v++) {
        std::sort(at[v].begin(), at[v].end(), [&](int i, int j) {
            auto other = [&](int k) {
                auto [p, q] = c.chords[k];
                return p == v ? q : p;
            };
            int di = (other(i) - v + c.m) % c.m;
            int dj = (other(j) - v + c.m) % c.m;
            return di < dj;
        });
    }
    return at;
}

namespace {

// directed incidence item at a vertex
struct Item {
    int to;
    bool is_chord;
    int id;
};

}  // namespace

std::vector<Face> faces(const ChordConfig& c) {
    if (!c.well_formed()) throw std::invalid_argument("malformed chord config");
    if (c.has_duplicate_chord())
        throw std::invalid_argument("duplicate chord; face decomposition undefined");
    if (c.has_crossing()) throw std::invalid_argument("crossing chords are not planar");

    std::vector<std::vector<int>> at = chords_at_vertices(c);
    // clockwise rotation at v: edge to v+1, chords, edge to v-1
    std::vector<std::vector<Item>> rot(c.m);
    for (int v = 0; v < c.m; v++) {
        rot[v].push_back({(v + 1) % c.m, false, v});
        for (int ci : at[v]) {
            auto [p, q] = c.chords[ci];
            rot[v].push_back({p == v ? q : p, true, ci});
        }
        rot[v].push_back({(v - 1 + c.m) % c.m, false, (v - 1 + c.m) % c.m});
    }

    auto item_index = [&](int v, bool is_chord, int id) {
        for (size_t i = 0; i < rot[v].size(); i++)
            if (rot[v][i].is_chord == is_chord && rot[v][i].id == id) return static_cast<int>(i);
        throw std::logic_error("missing rotation item");
    };

    // half-edge = (vertex, rotation slot); next half-edge around a face is the
    // clockwise predecessor of the reverse half-edge
    std::set<std::pair<int, int>> seen;
    std::vector<Face> out;
    for (int v0 = 0; v0 < c.m; v0++) {
        for (size_t s0 = 0; s0 < rot[v0].size(); s0++) {
            if (seen.count({v0, static_cast<int>(s0)})) continue;
            Face f;
            int v = v0;
            int slot = static_cast<int>(s0);
            while (!seen.count({v, slot})) {
                seen.insert({v, slot});
                Item it = rot[v][slot];
                f.steps.push_back({v, it.to, it.is_chord, it.id});
                int back = item_index(it.to, it.is_chord, it.id);
                int nslots = static_cast<int>(rot[it.to].size());
                int nxt = (back - 1 + nslots) % nslots;
                v = it.to;
                slot = nxt;
            }
            // corner at steps[i].to sits between that step and the next; its
            // rotational position is the outgoing item's index minus one (the
            // outgoing slot list starts with edge (v, v+1) at index 0)
            for (size_t i = 0; i < f.steps.size(); i++) {
                size_t j = (i + 1) % f.steps.size();
                int vert = f.steps[j].from;
                int out_slot = item_index(vert, f.steps[j].is_chord, f.steps[j].id);
                f.corner_positions.push_back(out_slot);
            }
            out.push_back(std::move(f));
        }
    }
    // drop the outer face: the one using the reverse of boundary edge 0
    for (size_t i = 0; i < out.size(); i++) {
        for (const FaceStep& s : out[i].steps)
            if (!s.is_chord && s.id == 0 && s.from == 1) {
                out.erase(out.begin() + i);
                size_t expect = c.chords.size() + 1;
                if (out.size() != expect) throw std::logic_error("face count mismatch");
                return out;
            }
    }
    throw std::logic_error("outer face not found");
}

std::string AffineLen::str() const {
    if (b == 0) return std::to_string(a);
    std::string s = b == 1 ? "n" : std::to_string(b) + "n";
    if (a > 0) s += "+" + std::to_string(a);
    if (a < 0) s += std::to_string(a);
    return s;
}

FeasibilityResult lec_check(const ChordConfig& c, std::int64_t nmin) {
    std::vector<Face> fs = faces(c);
    size_t nchords = c.chords.size();

    // root: most boundary edges, then largest, then earliest
    size_t root = 0;
    for (size_t i = 1; i < fs.size(); i++) {
        int be_i = fs[i].boundary_edge_count(), be_r = fs[root].boundary_edge_count();
        if (be_i > be_r || (be_i == be_r && fs[i].steps.size() > fs[root].steps.size())) root = i;
    }

    std::vector<AffineLen> len(nchords);
    std::vector<bool> solved(nchords, false);
    std::vector<bool> done(fs.size(), false);

    FeasibilityResult res;
    res.status = FeasibilityResult::Status::feasible;

    // peel leaf faces (exactly one unsolved chord) toward the root
    size_t remaining = fs.size() - 1;
    while (remaining > 0) {
        bool progress = false;
        for (size_t i = 0; i < fs.size(); i++) {
            if (done[i] || i == root) continue;
            std::vector<int> open;
            for (int ci : fs[i].chord_ids())
                if (!solved[ci]) open.push_back(ci);
            if (open.size() != 1) continue;
            // b + sum(solved) + l = n + 1
            AffineLen l{1 - fs[i].boundary_edge_count(), 1};
            for (int ci : fs[i].chord_ids())
                if (solved[ci] && ci != open[0]) {
                    l.a -= len[ci].a;
                    l.b -= len[ci].b;
                }
            len[open[0]] = l;
            solved[open[0]] = true;
            done[i] = true;
            remaining--;
            progress = true;
        }
        if (!progress) throw std::logic_error("face tree elimination stalled");
    }

    // root consistency: n + 1 = b_root + sum of its chord lengths
    AffineLen rhs{fs[root].boundary_edge_count(), 0};
    for (int ci : fs[root].chord_ids()) {
        rhs.a += len[ci].a;
        rhs.b += len[ci].b;
    }
    res.lengths = len;

    std::int64_t lo = nmin;
    std::int64_t hi = 0;
    bool bounded = false;
    std::string root_witness = "n+1=" + rhs.str();
    if (rhs.b == 1) {
        if (rhs.a != 1) {
            res.status = FeasibilityResult::Status::lec;
            res.witness = root_witness;
            return res;
        }
    } else {
        // (b-1) n = 1 - a pins n
        std::int64_t num = 1 - rhs.a, den = rhs.b - 1;
        if (num % den != 0) {
            res.status = FeasibilityResult::Status::lec;
            res.witness = root_witness;
            return res;
        }
        std::int64_t n0 = num / den;
        if (n0 < lo) {
            res.status = FeasibilityResult::Status::lec;
            res.witness = root_witness;
            return res;
        }
        lo = n0;
        hi = n0;
        bounded = true;
    }
    for (size_t ci = 0; ci < nchords; ci++) {
        const AffineLen& l = len[ci];
        auto chord_name = [&] {
            return "(" + std::to_string(c.chords[ci].first + 1) + " " +
                   std::to_string(c.chords[ci].second + 1) + ")";
        };
        if (l.b == 0) {
            if (l.a < 1) {
                res.status = FeasibilityResult::Status::lec;
                res.witness = "length of " + chord_name() + " must be " + l.str();
                return res;
            }
        } else if (l.b > 0) {
            // a + b n >= 1: n >= ceil((1-a)/b)
            std::int64_t need = 1 - l.a;
            std::int64_t bound = need <= 0 ? 0 : (need + l.b - 1) / l.b;
            lo = std::max(lo, bound);
        } else {
            // n <= floor((a-1)/(-b)), which may be negative
            std::int64_t cap = l.a <= 0 ? -1 : (l.a - 1) / (-l.b);
            hi = bounded ? std::min(hi, cap) : cap;
            bounded = true;
        }
        if (bounded && lo > hi) {
            res.status = FeasibilityResult::Status::lec;
            res.witness = "length of " + chord_name() + " must be " + l.str();
            return res;
        }
    }
    res.n_lo = lo;
    res.n_hi = bounded ? hi : -1;
    if (!bounded)
        res.n_condition = "n >= " + std::to_string(lo);
    else if (lo == hi)
        res.n_condition = "n = " + std::to_string(lo);
    else
        res.n_condition = std::to_string(lo) + " <= n <= " + std::to_string(hi);
    return res;
}

std::vector<ChordConfig> enumerate_chord_configs(int m) {
    if (m < 3) throw std::invalid_argument("m must be at least 3");
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < m; p++)
        for (int q = p + 1; q < m; q++) pairs.push_back({p, q});

    auto crosses = [](std::pair<int, int> x, std::pair<int, int> y) {
        auto [a, b] = x;
        auto [c, d] = y;
        return (a < c && c < b && b < d) || (c < a && a < d && d < b);
    };

    std::set<ChordConfig> classes;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, size_t next) -> void {
        ChordConfig cc;
        cc.m = m;
        cc.chords = cur;
        cc.normalize();
        classes.insert(cc.canonical());
        for (size_t i = next; i < pairs.size(); i++) {
            bool ok = true;
            for (auto& ch : cur)
                if (crosses(ch, pairs[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(pairs[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return {classes.begin(), classes.end()};
}

}  // namespace fib
