#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fib {

// An m-gon region with shadow edges drawn as chords inside the disk.
// Vertices 0..m-1 anticlockwise; boundary edge i joins i and i+1 (mod m) and
// has length 1. Chords never cross in the open disk (crossings would need an
// interior vertex of degree >= 4, impossible for deleted 2-segments), so the
// faces of a config form a tree under chord-adjacency.
struct ChordConfig {
    int m = 0;
    std::vector<std::pair<int, int>> chords;  // p < q, sorted

    void normalize();
    bool well_formed() const;  // in-range endpoints, p != q
    bool has_duplicate_chord() const;
    bool has_crossing() const;

    // least encoding over the dihedral group of order 2m
    ChordConfig canonical() const;

    std::string str() const;  // "(13)(14)(58)" in 1-based vertex names
    static ChordConfig parse(int m, const std::string& text);

    friend bool operator==(const ChordConfig& a, const ChordConfig& b) {
        return a.m == b.m && a.chords == b.chords;
    }
    friend bool operator<(const ChordConfig& a, const ChordConfig& b) {
        return a.m != b.m ? a.m < b.m : a.chords < b.chords;
    }
};

// One side of a face walk: a directed boundary edge or chord.
struct FaceStep {
    int from;
    int to;
    bool is_chord;
    int id;  // boundary edge index (== from) or chord index
};

// A face of the disk subdivision, traversed anticlockwise. corner_positions
// records, for the corner at steps[i].to, its rotational slot at that vertex:
// slot 0 touches boundary edge (v, v+1), slot ideg(v) touches (v-1, v).
struct Face {
    std::vector<FaceStep> steps;
    std::vector<int> corner_positions;

    int boundary_edge_count() const;
    std::vector<int> chord_ids() const;
};

// Interior faces (the outer face is dropped). Throws on crossings or
// duplicate chords.
std::vector<Face> faces(const ChordConfig& c);

// chords at each vertex, in clockwise rotational order from edge (v, v+1)
std::vector<std::vector<int>> chords_at_vertices(const ChordConfig& c);

// a + b*n with integer coefficients
struct AffineLen {
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t eval(std::int64_t n) const { return a + b * n; }
    std::string str() const;  // "n-1", "2", "2n"
    friend bool operator==(const AffineLen& x, const AffineLen& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// Every face must close up to a region of the original diagram, which has
// exactly n+1 edges; chord lengths are the unknowns. Because the face tree
// makes the system triangular the lengths come out affine in n, and the root
// face yields either an identity, a pinned value of n, or a contradiction.
struct FeasibilityResult {
    enum class Status { feasible, lec } status;
    std::string witness;               // on lec: "n+1=6", "n+1=n+3", ...
    std::vector<AffineLen> lengths;    // per chord, in chord order
    std::int64_t n_lo = 0;             // admissible n interval (n_hi < 0: unbounded)
    std::int64_t n_hi = -1;
    std::string n_condition;           // "n >= 7", "n = 7", ...

    bool feasible() const { return status == Status::feasible; }
};

FeasibilityResult lec_check(const ChordConfig& c, std::int64_t nmin = 7);

// all non-crossing simple chord configs on m vertices, one per dihedral class
std::vector<ChordConfig> enumerate_chord_configs(int m);

}  // namespace fib
