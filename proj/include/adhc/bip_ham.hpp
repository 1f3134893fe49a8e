#pragma once

#include "adhc/bipartite.hpp"
#include "adhc/walk.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace adhc {

enum class SolveStatus { found, absent, budget_exceeded };

struct SolverConfig {
    uint64_t node_limit = 50'000'000;
    int exact_cutoff = 24; // max order for exact pipeline routes
    enum class BranchRule { min_domain, index };
    BranchRule branch_rule = BranchRule::min_domain;
    int restarts = 20; // rotation-extension random starts before backtracking
};

struct BipHamResult {
    SolveStatus status = SolveStatus::absent;
    // Vertex labels of the host digraph, alternating sides; a cycle closes
    // implicitly from back to front.
    std::optional<std::vector<int>> sequence;
    uint64_t nodes = 0;
};

// Hamiltonian path with prescribed ends a and b (labels).  Throws on an
// end placement that is impossible for any spanning path (side sizes must
// differ by at most one, ends sit per the parity rule).
BipHamResult bip_ham_path(const BipartiteGraph& g, int a, int b,
                          const SolverConfig& cfg = {}, uint64_t seed = 1);

BipHamResult bip_ham_cycle(const BipartiteGraph& g, const SolverConfig& cfg = {},
                           uint64_t seed = 1);

namespace detail {

// Undirected graph on 0..n-1 with bitset rows; the shared substrate of the
// rotation-extension heuristic and the exact backtracking fallback.
class UGraph {
public:
    UGraph() = default;
    explicit UGraph(int n)
        : n_(n), words_(VertexSet::words_for(n)), adj_(size_t(n) * words_, 0) {}

    int size() const { return n_; }
    void add_edge(int u, int v) {
        adj_[size_t(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
        adj_[size_t(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    }
    bool has_edge(int u, int v) const {
        return (adj_[size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const {
        int c = 0;
        for (int i = 0; i < words_; ++i) c += std::popcount(adj_[size_t(v) * words_ + i]);
        return c;
    }
    const uint64_t* row(int v) const { return adj_.data() + size_t(v) * words_; }
    int words() const { return words_; }

    template <typename F>
    void for_each_nbr(int v, F&& f) const {
        const uint64_t* r = row(v);
        for (int wi = 0; wi < words_; ++wi) {
            uint64_t w = r[wi];
            while (w) {
                f((wi << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    int n_ = 0, words_ = 0;
    std::vector<uint64_t> adj_;
};

// Cover the whole graph by at most max_cycles vertex-disjoint simple cycles
// (each on >= 4 vertices, start chosen as the lowest unused vertex).  Exact,
// budget-counted.  max_cycles = 1 is the Hamiltonian cycle search.
struct CycleCoverResult {
    SolveStatus status = SolveStatus::absent;
    std::vector<std::vector<int>> cycles;
};
CycleCoverResult cycle_cover(const UGraph& g, int max_cycles, uint64_t node_limit,
                             uint64_t* nodes_used);

// Rotation-extension Hamiltonian cycle heuristic; returns the cycle sequence
// or nothing (never proves absence).
std::optional<std::vector<int>> rotation_extension_hc(const UGraph& g, int restarts,
                                                      uint64_t seed);

// Spanning 2-regular subgraph feasibility for a bipartite engine graph whose
// left side occupies positions 0..left_count-1; a necessary condition for any
// cycle cover.
bool two_factor_feasible(const UGraph& g, int left_count);

// Exact Hamiltonian path search, ends fixable (-1 = free), budget-counted.
struct HamPathResult {
    SolveStatus status = SolveStatus::absent;
    std::vector<int> path;
};
HamPathResult ham_path_exact(const UGraph& g, int a, int b, uint64_t node_limit,
                             uint64_t* nodes_used);

} // namespace detail

} // namespace adhc
