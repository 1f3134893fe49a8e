#pragma once

#include "adhc/digraph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace adhc {

// Desk-scale stand-ins for the asymptotic constant chain; every engine
// reports measured quantities instead of assuming the bounds hold.
struct Params {
    double alpha = 0.3;
    double beta = 0.1;
    double gamma = 0.05;
    double lambda = 0.15;
    double c = 0.02;
};

// A and B witness alpha-extremality on a digraph of order 2n:
// (1-alpha)n <= |A|,|B| <= (1+alpha)n, every A-vertex sends at most alpha·n
// arcs into B, every B-vertex receives at most alpha·n arcs from A.
struct ExtremalWitness {
    VertexSet a, b;
    double alpha = 0.0;
};

bool witness_valid(const Digraph& d, const ExtremalWitness& w);

enum class WitnessMode { exact, local_search };

struct WitnessSearch {
    std::optional<ExtremalWitness> witness;
    // exact mode proves absence; a local-search miss is inconclusive
    bool exhaustive = false;
};

// Exact mode scans subset pairs inside the size window with monotone degree
// pruning (a vertex with deg+(v,B) > alpha·n can never join A) and returns a
// witness minimising the larger cross-degree.  Orders above 16 must use
// local_search.
WitnessSearch extremal_witness(const Digraph& d, double alpha, WitnessMode mode,
                               uint64_t seed = 1);

// Five-way partition produced by preprocessing an extremal witness; z holds
// the degree-deficient vertices.
struct Partition5 {
    VertexSet x1, x2, y1, y2, z;
    // measured minima over the listed vertex classes, -1 when vacuous
    struct Floors {
        int x_opp_semi = -1;  // min over X'_{3-i} of min(deg+, deg-) into X'_i
        int y_opp_in = -1;    // min over Y'_{3-i} of deg- from X'_i
        int y_same_out = -1;  // min over Y'_i of deg+ into X'_i
        int y_same_semi = -1; // min over Y'_i of min(deg+, deg-) into Y'_i
        int x_same_in = -1;   // min over X'_i of deg- from Y'_i
        int x_opp_out = -1;   // min over X'_{3-i} of deg+ into Y'_i
    };
    std::array<Floors, 2> floors; // index i-1
};

// Splits V along the witness sets (X̃_1 = V∖(A∪B), X̃_2 = A∩B, Ỹ_1 = A∖B,
// Ỹ_2 = B∖A), then peels vertices missing the alpha^{1/3}·n degree pattern
// into Z.
Partition5 preprocess(const Digraph& d, const ExtremalWitness& w, double alpha);

struct FourParts {
    VertexSet x1, x2, y1, y2;
};

struct UnclassifiedVertex : std::runtime_error {
    int vertex;
    explicit UnclassifiedVertex(int v)
        : std::runtime_error("vertex " + std::to_string(v) +
                             " matches no distribution class"),
          vertex(v) {}
};

// Assigns every Z vertex to the first matching membership class (threshold
// 5·gamma·n on both required degrees) and places it per the distribution
// procedure.  Throws UnclassifiedVertex when the class list fails, which the
// pipeline treats as a fall-back signal.
FourParts distribute_Z(const Digraph& d, const Partition5& p, double gamma);

} // namespace adhc
