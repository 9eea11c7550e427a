#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fib/chords.hpp"
#include "fib/stargraph.hpp"

namespace fib {

// Labelling contradiction rules, applied in order.
enum class LacRule {
    r1_no_boundary_edge,  // a face with no boundary edge has no a/b corner
    r2_chord_bigon,       // two chords with both endpoints shared bound a bigon
    r3_parity,            // some vertex admits no corner letter at all
    r4_no_labeling,       // the full labelling search is empty
};

struct LacResult {
    bool pass = false;
    LacRule rule = LacRule::r4_no_labeling;
    std::string witness;
};

// A surviving config together with one corner letter per boundary vertex.
// corner[v] is the letter of the region's corner at v in the clockwise vertex
// reading; faces carry a +/- orientation two-colouring along the face tree.
struct LabeledRegion {
    ChordConfig config;
    std::vector<CornerLetter> corners;

    LabeledRegion canonical() const;
    // canonical form of the corner cycle alone (rotation + reflected
    // inversion), the key used when shapes are compared by labelling only
    std::vector<CornerLetter> corner_cycle_canonical() const;
    std::string str() const;
};

std::vector<LabeledRegion> enumerate_labelings(const ChordConfig& c);

LacResult lac_check(const ChordConfig& c);

struct ClassifiedRegion {
    ChordConfig config;
    FeasibilityResult feasibility;
    std::vector<LabeledRegion> labelings;  // filled when requested
};

struct ClassificationReport {
    int m = 0;
    std::int64_t nmin = 7;
    std::vector<ClassifiedRegion> survivors;
    std::int64_t classes = 0;     // canonical configs examined
    std::int64_t lec_killed = 0;
    std::int64_t lac_killed = 0;
};

// m > 9 enumerations grow fast and are gated behind allow_large.
ClassificationReport classify_regions(int m, std::int64_t nmin = 7, bool with_labelings = false,
                                      bool allow_large = false);

// Maximal run of degree-3 vertices whose corners alternate between the two
// even-length letters; length is counted in edges of the run.
struct BSegment {
    int start_vertex = 0;            // first vertex of the run
    int edge_count = 0;              // k: edges between consecutive run vertices
    std::vector<CornerLetter> corners;
};

std::vector<BSegment> find_b_segments(const LabeledRegion& region,
                                      const std::vector<int>& degrees);

}  // namespace fib
