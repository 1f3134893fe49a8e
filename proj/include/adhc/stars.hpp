#pragma once

#include "adhc/digraph.hpp"

#include <array>
#include <vector>

namespace adhc {

// Greedy-maximal collection of disjoint 2-in-stars (both arcs toward the
// center) together with two independent arcs.
struct StarPacking {
    struct Star {
        int center;
        int leaf1, leaf2; // arcs leaf -> center
    };
    std::vector<Star> stars;
    std::array<std::pair<int, int>, 2> arcs; // vertex-disjoint
};

StarPacking two_in_star_packing(const Digraph& d);

// (d-1)n - 4(d-1+D) over 3(d+D-1): the guaranteed star count for minimum
// out-degree d and maximum in-degree D.
double star_packing_floor(int n, int min_out, int max_in);

} // namespace adhc
