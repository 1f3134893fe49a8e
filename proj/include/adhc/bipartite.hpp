#pragma once

#include "adhc/digraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace adhc {

// Undirected bipartite graph whose vertices keep their labels from a host
// digraph.  Rows are bitsets over positions of the opposite side.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::vector<int> left_labels, std::vector<int> right_labels);

    int left_size() const { return (int)left_.size(); }
    int right_size() const { return (int)right_.size(); }
    int size() const { return left_size() + right_size(); }

    int left_label(int li) const { return left_[li]; }
    int right_label(int ri) const { return right_[ri]; }
    const std::vector<int>& left_labels() const { return left_; }
    const std::vector<int>& right_labels() const { return right_; }

    void add_edge(int li, int ri);
    bool has_edge(int li, int ri) const;

    int left_degree(int li) const;
    int right_degree(int ri) const;
    int min_degree() const;
    int64_t edge_count() const { return edges_; }

    std::span<const uint64_t> left_row(int li) const {
        return {ladj_.data() + size_t(li) * rwords_, size_t(rwords_)};
    }
    std::span<const uint64_t> right_row(int ri) const {
        return {radj_.data() + size_t(ri) * lwords_, size_t(lwords_)};
    }

    template <typename F>
    void for_each_left_nbr(int li, F&& f) const {
        scan(left_row(li), f);
    }
    template <typename F>
    void for_each_right_nbr(int ri, F&& f) const {
        scan(right_row(ri), f);
    }

private:
    template <typename F>
    static void scan(std::span<const uint64_t> row, F&& f) {
        for (size_t wi = 0; wi < row.size(); ++wi) {
            uint64_t w = row[wi];
            while (w) {
                f(int(wi << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> left_, right_;
    int lwords_ = 0, rwords_ = 0;
    int64_t edges_ = 0;
    std::vector<uint64_t> ladj_, radj_;
};

// Edge {u,v} iff the arc (u,v) is in d, u in U, v in V.  Sides must be
// disjoint.
BipartiteGraph bipartite_view(const Digraph& d, const VertexSet& u, const VertexSet& v);

// Moon–Moser degree condition for a balanced bipartite graph on n vertices:
// for every 1 <= k <= n/4 fewer than k vertices have degree <= k.
bool moon_moser_ok(const BipartiteGraph& g);

} // namespace adhc
