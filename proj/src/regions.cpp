#include "fib/regions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fib {

namespace {

// +1 for corners of positively oriented faces (a, b, mu), -1 for the others
int dletter_face_sign(DLetter d) {
    switch (d) {
        case DLetter::a:
        case DLetter::b:
        case DLetter::mu: return +1;
        case DLetter::a_inv:
        case DLetter::b_inv:
        case DLetter::lam: return -1;
    }
    return 0;
}

bool is_a(DLetter d) { return d == DLetter::a || d == DLetter::a_inv; }
bool is_b(DLetter d) { return d == DLetter::b || d == DLetter::b_inv; }

struct LabelEngine {
    const ChordConfig& c;
    std::vector<Face> fs;
    std::vector<std::vector<int>> at;        // chords at each vertex, cw order
    std::vector<int> ideg;                   // chords per vertex
    std::vector<int> face_color;             // relative two-colouring, 0/1
    // per face: corners as (vertex, position); position identifies the letter
    // of the vertex word that lands in this face
    std::vector<std::vector<std::pair<int, int>>> face_corners;
    std::vector<std::vector<int>> faces_of_vertex_pos;  // [v][pos] -> face

    explicit LabelEngine(const ChordConfig& cfg) : c(cfg) {
        fs = faces(c);
        at = chords_at_vertices(c);
        ideg.resize(c.m);
        for (int v = 0; v < c.m; v++) ideg[v] = static_cast<int>(at[v].size());
        face_corners.resize(fs.size());
        faces_of_vertex_pos.assign(c.m, {});
        for (int v = 0; v < c.m; v++) faces_of_vertex_pos[v].assign(ideg[v] + 1, -1);
        for (size_t fi = 0; fi < fs.size(); fi++) {
            const Face& f = fs[fi];
            for (size_t i = 0; i < f.steps.size(); i++) {
                size_t j = (i + 1) % f.steps.size();
                int v = f.steps[j].from;
                int pos = f.corner_positions[i];
                face_corners[fi].push_back({v, pos});
                faces_of_vertex_pos[v][pos] = static_cast<int>(fi);
            }
        }
        // two-colour the face tree across chords
        std::map<int, std::vector<int>> chord_faces;
        for (size_t fi = 0; fi < fs.size(); fi++)
            for (int ci : fs[fi].chord_ids()) chord_faces[ci].push_back(static_cast<int>(fi));
        face_color.assign(fs.size(), -1);
        std::vector<int> stack = {0};
        face_color[0] = 0;
        while (!stack.empty()) {
            int fi = stack.back();
            stack.pop_back();
            for (int ci : fs[fi].chord_ids())
                for (int fj : chord_faces[ci])
                    if (face_color[fj] < 0) {
                        face_color[fj] = 1 - face_color[fi];
                        stack.push_back(fj);
                    }
        }
    }

    // sign of the face at (v, pos) under a global flip
    int face_sign(int v, int pos, int flip) const {
        int col = face_color[faces_of_vertex_pos[v][pos]] ^ flip;
        return col == 0 ? +1 : -1;
    }

    // The corner word is read clockwise at the vertex, which sweeps the disk
    // interior from edge (v-1, v) to edge (v, v+1): the first letter lands in
    // the face at rotational slot ideg(v), the last letter at slot 0. Middle
    // positions are lambda/mu fillers.
    DLetter corner_dletter(CornerLetter letter, int v, int pos) const {
        bool expanded = ideg[v] > 0;
        if (pos == ideg[v]) return first_dletter(letter, expanded);
        if (pos == 0) return last_dletter(letter, expanded);
        return DLetter::lam;
    }

    std::vector<CornerLetter> candidates(int v, int flip) const {
        std::vector<CornerLetter> out;
        for (CornerLetter letter : all_corner_letters()) {
            int need = min_underlying_length(letter) - 1;
            if (ideg[v] < need || (ideg[v] - need) % 2 != 0) continue;
            DLetter last = last_dletter(letter, ideg[v] > 0);
            if (dletter_face_sign(last) != face_sign(v, 0, flip)) continue;
            out.push_back(letter);
        }
        return out;
    }

    bool face_ok(size_t fi, const std::vector<CornerLetter>& corners, int flip) const {
        const Face& f = fs[fi];
        int sign = face_color[fi] ^ flip ? -1 : +1;
        size_t n = f.steps.size();
        int ia = -1, ib = -1;
        for (size_t i = 0; i < n; i++) {
            auto [v, pos] = face_corners[fi][i];
            if (pos != 0 && pos != ideg[v]) continue;
            DLetter d = corner_dletter(corners[v], v, pos);
            if (is_a(d)) {
                if (ia >= 0) return false;
                if (dletter_face_sign(d) != sign) return false;
                ia = static_cast<int>(i);
            } else if (is_b(d)) {
                if (ib >= 0) return false;
                if (dletter_face_sign(d) != sign) return false;
                ib = static_cast<int>(i);
            }
        }
        if (ia < 0 || ib < 0) return false;
        // anticlockwise adjacency across a boundary edge: b then a on positive
        // faces, a^-1 then b^-1 on negative ones
        int lead = sign > 0 ? ib : ia;
        int trail = sign > 0 ? ia : ib;
        if ((lead + 1) % static_cast<int>(n) != trail) return false;
        const FaceStep& between = f.steps[(lead + 1) % n];
        return !between.is_chord;
    }
};

}  // namespace

std::vector<LabeledRegion> enumerate_labelings(const ChordConfig& c) {
    LabelEngine eng(c);
    for (const Face& f : eng.fs)
        if (f.boundary_edge_count() == 0) return {};

    std::set<std::string> seen;
    std::vector<LabeledRegion> out;
    std::vector<CornerLetter> corners(c.m, CornerLetter{CornerBase::A, +1});

    for (int flip = 0; flip < 2; flip++) {
        std::vector<std::vector<CornerLetter>> cand(c.m);
        bool dead = false;
        for (int v = 0; v < c.m; v++) {
            cand[v] = eng.candidates(v, flip);
            if (cand[v].empty()) dead = true;
        }
        if (dead) continue;
        // faces fully determined once their latest vertex is assigned
        std::vector<std::vector<size_t>> check_after(c.m);
        for (size_t fi = 0; fi < eng.fs.size(); fi++) {
            int last = 0;
            for (auto [v, pos] : eng.face_corners[fi]) last = std::max(last, v);
            check_after[last].push_back(fi);
        }
        auto rec = [&](auto&& self, int v) -> void {
            if (v == c.m) {
                LabeledRegion lr{c, corners};
                LabeledRegion canon = lr.canonical();
                std::string key = canon.str();
                if (seen.insert(key).second) out.push_back(canon);
                return;
            }
            for (CornerLetter letter : cand[v]) {
                corners[v] = letter;
                bool ok = true;
                for (size_t fi : check_after[v])
                    if (!eng.face_ok(fi, corners, flip)) {
                        ok = false;
                        break;
                    }
                if (ok) self(self, v + 1);
            }
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end(),
              [](const LabeledRegion& a, const LabeledRegion& b) { return a.str() < b.str(); });
    return out;
}

LabeledRegion LabeledRegion::canonical() const {
    int m = config.m;
    LabeledRegion best;
    bool have = false;
    for (int refl = 0; refl < 2; refl++)
        for (int r = 0; r < m; r++) {
            LabeledRegion img;
            img.config.m = m;
            img.corners.resize(m);
            for (auto [p, q] : config.chords) {
                int pp = refl ? (m - p) % m : p;
                int qq = refl ? (m - q) % m : q;
                img.config.chords.push_back({(pp + r) % m, (qq + r) % m});
            }
            img.config.normalize();
            for (int v = 0; v < m; v++) {
                int to = refl ? ((m - v) % m + r) % m : (v + r) % m;
                img.corners[to] = refl ? corners[v].inverse() : corners[v];
            }
            if (!have || std::make_pair(img.config.chords, img.corners) <
                             std::make_pair(best.config.chords, best.corners)) {
                best = img;
                have = true;
            }
        }
    return best;
}

std::vector<CornerLetter> LabeledRegion::corner_cycle_canonical() const {
    int m = config.m;
    std::vector<CornerLetter> best;
    for (int refl = 0; refl < 2; refl++)
        for (int r = 0; r < m; r++) {
            std::vector<CornerLetter> img(m);
            for (int v = 0; v < m; v++) {
                int to = refl ? ((m - v) % m + r) % m : (v + r) % m;
                img[to] = refl ? corners[v].inverse() : corners[v];
            }
            if (best.empty() || img < best) best = img;
        }
    return best;
}

std::string LabeledRegion::str() const {
    std::string s = config.str() + " |";
    for (CornerLetter c : corners) s += " " + corner_str(c);
    return s;
}

LacResult lac_check(const ChordConfig& c) {
    LacResult res;
    if (c.has_duplicate_chord()) {
        res.pass = false;
        res.rule = LacRule::r2_chord_bigon;
        res.witness = "parallel chords bound a bigon whose corners force a cancelling pair";
        return res;
    }
    std::vector<Face> fs = faces(c);
    for (const Face& f : fs)
        if (f.boundary_edge_count() == 0) {
            bool bigon = f.steps.size() == 2;
            res.pass = false;
            res.rule = bigon ? LacRule::r2_chord_bigon : LacRule::r1_no_boundary_edge;
            res.witness = "face";
            for (const FaceStep& s : f.steps) res.witness += " " + std::to_string(s.from + 1);
            res.witness += " has no boundary edge, so no a/b corner";
            return res;
        }
    LabelEngine eng(c);
    for (int v = 0; v < c.m; v++) {
        if (eng.candidates(v, 0).empty() && eng.candidates(v, 1).empty()) {
            res.pass = false;
            res.rule = LacRule::r3_parity;
            res.witness = "vertex " + std::to_string(v + 1) + " admits no corner letter";
            return res;
        }
    }
    if (enumerate_labelings(c).empty()) {
        res.pass = false;
        res.rule = LacRule::r4_no_labeling;
        res.witness = "no corner labelling satisfies the relator constraints";
        return res;
    }
    res.pass = true;
    return res;
}

ClassificationReport classify_regions(int m, std::int64_t nmin, bool with_labelings,
                                      bool allow_large) {
    if (m > 9 && !allow_large)
        throw std::invalid_argument("degree above 9 is gated; pass the large-degree flag");
    ClassificationReport report;
    report.m = m;
    report.nmin = nmin;
    for (const ChordConfig& cfg : enumerate_chord_configs(m)) {
        report.classes++;
        FeasibilityResult feas = lec_check(cfg, nmin);
        if (!feas.feasible()) {
            report.lec_killed++;
            continue;
        }
        LacResult lac = lac_check(cfg);
        if (!lac.pass) {
            report.lac_killed++;
            continue;
        }
        ClassifiedRegion cr;
        cr.config = cfg;
        cr.feasibility = feas;
        if (with_labelings) cr.labelings = enumerate_labelings(cfg);
        report.survivors.push_back(std::move(cr));
    }
    std::sort(report.survivors.begin(), report.survivors.end(),
              [](const ClassifiedRegion& a, const ClassifiedRegion& b) {
                  if (a.config.chords.size() != b.config.chords.size())
                      return a.config.chords.size() < b.config.chords.size();
                  return a.config.chords < b.config.chords;
              });
    return report;
}

std::vector<BSegment> find_b_segments(const LabeledRegion& region,
                                      const std::vector<int>& degrees) {
    int m = region.config.m;
    if (static_cast<int>(degrees.size()) != m)
        throw std::invalid_argument("degree annotation size mismatch");
    // run vertices: degree 3 with an x/y corner (the only letters a degree-3
    // a x y^-1 vertex can contribute)
    std::vector<bool> mark(m);
    for (int v = 0; v < m; v++) {
        CornerBase b = region.corners[v].base;
        mark[v] = degrees[v] == 3 && (b == CornerBase::X || b == CornerBase::Y);
    }
    auto alternates = [&](int u, int v) {
        return mark[u] && mark[v] && region.corners[u].base != region.corners[v].base &&
               region.corners[u].sign == region.corners[v].sign;
    };

    std::vector<BSegment> out;
    bool whole_cycle = true;
    for (int v = 0; v < m; v++)
        if (!alternates(v, (v + 1) % m)) whole_cycle = false;
    if (whole_cycle) {
        BSegment s;
        s.start_vertex = 0;
        s.edge_count = m;
        for (int v = 0; v < m; v++) s.corners.push_back(region.corners[v]);
        return {s};
    }
    for (int start = 0; start < m; start++) {
        if (!mark[start]) continue;
        int prev = (start - 1 + m) % m;
        if (alternates(prev, start)) continue;  // not maximal
        int len = 0;
        while (alternates((start + len) % m, (start + len + 1) % m)) len++;
        if (len == 0) continue;  // a lone marked vertex spans no run edge
        BSegment s;
        s.start_vertex = start;
        s.edge_count = len;
        for (int i = 0; i <= len; i++) s.corners.push_back(region.corners[(start + i) % m]);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace fib
