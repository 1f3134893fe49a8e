#pragma once

#include "adhc/bipartite.hpp"
#include "adhc/digraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace adhc {

// Canonical labelling used by every generator below: Y_1, X_1, Y_2, X_2 in
// consecutive index blocks, so certificates and recognizers are reproducible.
struct FLabels {
    VertexSet y1, x1, y2, x2;
    int y1_vertex = -1; // unique Y_1 vertex when k = 1
    int y2_vertex = -1;
    int x_special = -1; // the distinguished X_1 vertex of the second exception
};

// Extremal family: arcs Y_i -> Y_i ∪ X_i and X_i -> Y_{3-i} ∪ X_{3-i}.
// n even, 0 <= k <= n/2.
Digraph gen_F(int n, int k, FLabels* labels = nullptr);

// The two edge-maximal exceptions built from F_{n,1}: the first adds the
// digon y_1 <-> y_2, the second adds y_1 -> y_2 -> x -> y_1 with x the
// lowest-index X_1 vertex.
Digraph gen_F1(int n, FLabels* labels = nullptr);
Digraph gen_F2(int n, FLabels* labels = nullptr);

// Ladder on u_1..u_n, v_1..v_n with u_i ~ v_j iff |i-j| <= 1; positions
// 0..n-1 are the u side.  The directed version orients every edge u -> v.
BipartiteGraph gen_ladder(int n);
Digraph gen_anti_ladder(int n);

// Cycle v_0..v_{L-1} with arc i between v_i and v_{i+1 mod L}; bit true means
// forward.  Needs length >= 3.
Digraph gen_oriented_cycle(const std::vector<uint8_t>& pattern);
// Alternating orientation; throws on odd length (cannot alternate).
Digraph gen_anti_cycle(int length);

Digraph gen_complete(int n);

// delta0 >= d sampler: uniform arcs at density d/(n-1), then greedy arc
// repair lifts deficient vertices.  Deterministic per seed.
Digraph gen_random_min_semidegree(int n, int d, uint64_t seed);

enum class ExceptionKind { none, f1, f2 };

struct RecognizeResult {
    ExceptionKind kind = ExceptionKind::none;
    // to_canonical[v] = canonical index of host vertex v; empty when none.
    std::vector<int> to_canonical;
};

// Structural recognizer for the two exceptions; keyed to digon structure and
// the unique degree signatures of y_1, y_2 and x rather than generic
// isomorphism.  Exact: a non-none answer is verified arc-for-arc.
RecognizeResult recognize_exception(const Digraph& d);

} // namespace adhc
