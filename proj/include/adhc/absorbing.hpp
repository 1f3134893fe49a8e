#pragma once

#include "adhc/digraph.hpp"
#include "adhc/walk.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace adhc {

// (a,b,c,d) absorbs the ordered pair (x,y): abcd is a proper anti-directed
// path and so is axcbyd, i.e. the arcs (a,b),(c,b),(c,d),(a,x),(c,x),(y,b),
// (y,d) are all present.
struct AbsorberTuple {
    std::array<int, 4> abcd{-1, -1, -1, -1};
    std::pair<int, int> target{-1, -1}; // bound at absorb time when unset
};

// (a,b) connects (x,y): xaby is an anti-directed path via (a,x),(a,b),(y,b).
struct ConnectorPair {
    std::pair<int, int> ab{-1, -1};
    std::pair<int, int> target{-1, -1};
};

bool absorber_valid(const Digraph& d, const AbsorberTuple& t);
bool connector_valid(const Digraph& d, const ConnectorPair& c);

// Deterministic enumeration (ascending tuple order); limit caps the output.
std::vector<AbsorberTuple> enumerate_absorbers(const Digraph& d, int x, int y,
                                               size_t limit = SIZE_MAX);
std::vector<ConnectorPair> enumerate_connectors(const Digraph& d, int x, int y,
                                                size_t limit = SIZE_MAX);

// Randomized selection of an image-disjoint family from per-target candidate
// lists.  Each distinct tuple is kept with probability (b/d)·n / |universe|,
// overlapping tuples are dropped first-kept-wins, and the family is capped at
// b·n/d.  Per-target hit counts are reported rather than enforced: the
// probabilistic floor c·n may simply fail at small n.
struct FamilySelection {
    std::vector<std::vector<int>> family;
    std::vector<int64_t> hits;              // per target
    std::vector<size_t> shortfall_targets;  // hits below c·n
};

FamilySelection select_disjoint_family(int n,
                                       const std::vector<std::vector<std::vector<int>>>& candidates,
                                       double b, double c, uint64_t seed);

struct SupplyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AbsorbingPath {
    OrientedWalk path; // proper anti-directed, |path| = 4l + 2(l-1)
    std::vector<AbsorberTuple> registry;
};

// Chains l image-disjoint absorber tuples with connectors:
// A_1 x_1 y_1 A_2 ... A_l.  Throws SupplyError naming the failing link.
AbsorbingPath build_absorbing_path(const Digraph& d, int num_absorbers, uint64_t seed);

// Inserts the vertices of W (paired ascending) into free registry absorbers,
// replacing each segment abcd by axcbyd.  Endpoints never move.
OrientedWalk absorb(const Digraph& d, const OrientedWalk& path,
                    std::vector<AbsorberTuple>& registry, const VertexSet& w);

} // namespace adhc
