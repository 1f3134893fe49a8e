#include "adhc/bipartite.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace adhc {

BipartiteGraph::BipartiteGraph(std::vector<int> left_labels, std::vector<int> right_labels)
    : left_(std::move(left_labels)),
      right_(std::move(right_labels)),
      lwords_(VertexSet::words_for((int)left_.size())),
      rwords_(VertexSet::words_for((int)right_.size())),
      ladj_(left_.size() * size_t(rwords_), 0),
      radj_(right_.size() * size_t(lwords_), 0) {}

void BipartiteGraph::add_edge(int li, int ri) {
    if (li < 0 || li >= left_size() || ri < 0 || ri >= right_size())
        throw std::out_of_range("bipartite edge endpoint out of range");
    if (has_edge(li, ri)) return;
    ladj_[size_t(li) * rwords_ + (ri >> 6)] |= uint64_t{1} << (ri & 63);
    radj_[size_t(ri) * lwords_ + (li >> 6)] |= uint64_t{1} << (li & 63);
    ++edges_;
}

bool BipartiteGraph::has_edge(int li, int ri) const {
    return (ladj_[size_t(li) * rwords_ + (ri >> 6)] >> (ri & 63)) & 1u;
}

int BipartiteGraph::left_degree(int li) const {
    int c = 0;
    for (auto w : left_row(li)) c += std::popcount(w);
    return c;
}

int BipartiteGraph::right_degree(int ri) const {
    int c = 0;
    for (auto w : right_row(ri)) c += std::popcount(w);
    return c;
}

int BipartiteGraph::min_degree() const {
    int m = size() == 0 ? 0 : left_size() ? left_degree(0) : right_degree(0);
    for (int i = 0; i < left_size(); ++i) m = std::min(m, left_degree(i));
    for (int i = 0; i < right_size(); ++i) m = std::min(m, right_degree(i));
    return m;
}

BipartiteGraph bipartite_view(const Digraph& d, const VertexSet& u, const VertexSet& v) {
    if (u.intersects(v)) throw std::invalid_argument("bipartite sides overlap");
    BipartiteGraph g(u.to_vector(), v.to_vector());
    for (int li = 0; li < g.left_size(); ++li) {
        int src = g.left_label(li);
        for (int ri = 0; ri < g.right_size(); ++ri)
            if (d.has_arc(src, g.right_label(ri))) g.add_edge(li, ri);
    }
    return g;
}

bool moon_moser_ok(const BipartiteGraph& g) {
    if (g.left_size() != g.right_size()) return false;
    int n = g.size();
    std::vector<int> degs;
    degs.reserve(n);
    for (int i = 0; i < g.left_size(); ++i) degs.push_back(g.left_degree(i));
    for (int i = 0; i < g.right_size(); ++i) degs.push_back(g.right_degree(i));
    std::sort(degs.begin(), degs.end());
    for (int k = 1; k <= n / 4; ++k) {
        int low = 0;
        while (low < n && degs[low] <= k) ++low;
        if (low >= k) return false;
    }
    return true;
}

} // namespace adhc
