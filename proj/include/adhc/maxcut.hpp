#pragma once

#include "adhc/digraph.hpp"
#include "adhc/walk.hpp"

namespace adhc {

struct MaxcutResult {
    VertexSet x, y;
};

// Given e(X,Y) >= c|X||Y|, produces disjoint X' ⊆ X, Y' ⊆ Y with
// δ+(X',Y') >= (c/8)|Y| and δ-(Y',X') >= (c/8)|X|.  X ∩ Y is partitioned by
// local moves plus a whole-swap test, then deficient vertices are deleted
// until the degree floors hold.
MaxcutResult maxcut_partition(const Digraph& d, const VertexSet& x, const VertexSet& y,
                              double c);

// Proper anti-directed path on at least (c/4)·min(|X|,|Y|) vertices inside
// D[X ∪ Y], built from a maximal path of the auxiliary bipartite graph on
// the maxcut output.
OrientedWalk proper_adp_from_dense_pair(const Digraph& d, const VertexSet& x,
                                        const VertexSet& y, double c);

} // namespace adhc
