#pragma once

#include "adhc/bip_ham.hpp"
#include "adhc/extremal.hpp"
#include "adhc/walk.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace adhc {

// Which half of which part a vertex is preassigned to.
enum class SplitCell { x1a, x1b, x2a, x2b, y1a, y1b, y2a, y2b };

// Eight-set halving of {X_i, Y_i}; the induced bipartite sides are
// U_i = X_{3-i}^i ∪ Y_i^i and V_i = X_i^i ∪ Y_i^{3-i}.
struct Splitting {
    VertexSet x[2][2]; // x[i][j] = X_{i+1}^{j+1}
    VertexSet y[2][2];

    VertexSet u_side(int i) const; // i in {1,2}
    VertexSet v_side(int i) const;

    // measured goodness
    int min_deg[2] = {0, 0}; // δ(G_i)
    int q_size[2] = {0, 0};  // |Q_i|, vertices of small degree in the big G
};

struct SplitTargets {
    int x[2][2] = {{0, 0}, {0, 0}}; // desired |X_{i+1}^{j+1}|
    int y[2][2] = {{0, 0}, {0, 0}};
};

// Seeded random split hitting the targets exactly, preassignments respected;
// redrawn until the goodness thresholds δ(G_i) >= gamma·n and |Q_i| <= beta·n
// hold or retries run out (the deterministic stand-in for the Chernoff
// argument).  Target vectors violating the near-balance window are rejected
// up front.
std::optional<Splitting> good_splitting(const Digraph& d, const FourParts& parts,
                                        const std::vector<std::pair<int, SplitCell>>& preassigned,
                                        const SplitTargets& targets, const Params& params,
                                        uint64_t seed, int max_retries = 64);

// An arc that the extremal configuration forbids: inside an X part, X_i into
// Y_i, or from Y_i across to the other class pair.
bool is_connecting_edge(const FourParts& parts, int u, int v);

enum class EdgePairShape {
    opposite,   // one edge realisable W_1->W_2 and the other W_2->W_1
    one_sided_1, // both edges only W_1->W_2
    one_sided_2, // both edges only W_2->W_1
};

struct ConnectingEdges {
    std::pair<int, int> e1, e2; // vertex-disjoint arcs
    EdgePairShape shape;
};

// First vertex-disjoint pair of connecting edges in lexicographic order,
// classified by which side assignment the Y-memberships force.
std::optional<ConnectingEdges> find_connecting_edges(const Digraph& d, const FourParts& parts);

// Stitches Hamiltonian paths of the two split-induced bipartite graphs and
// the two edges into a spanning anti-directed cycle.  Size hypotheses: either
// all four sides equal, or |U_i| = |V_i|+1 and |V_{3-i}| = |U_{3-i}|+1 with
// both edges from U_i to V_{3-i}.  Returns nothing when the bipartite engine
// comes up empty (inconclusive).
std::optional<OrientedWalk> reduce_to_adhc(const Digraph& d, const Splitting& s,
                                           std::pair<int, int> e1, std::pair<int, int> e2,
                                           const SolverConfig& cfg = {}, uint64_t seed = 1);

} // namespace adhc
