#pragma once

#include "adhc/vertex_set.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace adhc {

// Loopless directed graph with bitset in/out neighborhoods.  Intended to be
// immutable once built; every solver and engine only reads it, so sharing one
// instance across threads is safe.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int order)
        : n_(order),
          words_(VertexSet::words_for(order)),
          out_(size_t(order) * words_, 0),
          in_(size_t(order) * words_, 0) {
        if (order < 0) throw std::invalid_argument("digraph order must be non-negative");
    }

    int order() const { return n_; }
    int64_t arc_count() const { return arcs_; }

    void add_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop arc rejected");
        if (has_arc(u, v)) return;
        out_[size_t(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
        in_[size_t(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
        ++arcs_;
    }

    bool has_arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (out_[size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    std::span<const uint64_t> out_row(int v) const {
        return {out_.data() + size_t(v) * words_, size_t(words_)};
    }
    std::span<const uint64_t> in_row(int v) const {
        return {in_.data() + size_t(v) * words_, size_t(words_)};
    }

    int out_degree(int v) const { return popcount_row(out_row(v)); }
    int in_degree(int v) const { return popcount_row(in_row(v)); }

    // |N+(v) ∩ S| / |N-(v) ∩ S|
    int out_degree_in(int v, const VertexSet& s) const { return popcount_and(out_row(v), s); }
    int in_degree_in(int v, const VertexSet& s) const { return popcount_and(in_row(v), s); }

    VertexSet out_set(int v) const { return row_to_set(out_row(v)); }
    VertexSet in_set(int v) const { return row_to_set(in_row(v)); }

    template <typename F>
    void for_each_out(int v, F&& f) const {
        for_each_in_row(out_row(v), f);
    }
    template <typename F>
    void for_each_in(int v, F&& f) const {
        for_each_in_row(in_row(v), f);
    }

    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> r;
        r.reserve(size_t(arcs_));
        for (int u = 0; u < n_; ++u)
            for_each_out(u, [&](int v) { r.emplace_back(u, v); });
        return r;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    static int popcount_row(std::span<const uint64_t> row) {
        int c = 0;
        for (auto w : row) c += std::popcount(w);
        return c;
    }
    int popcount_and(std::span<const uint64_t> row, const VertexSet& s) const {
        int c = 0;
        const uint64_t* sw = s.words();
        for (int i = 0; i < words_; ++i) c += std::popcount(row[i] & sw[i]);
        return c;
    }
    VertexSet row_to_set(std::span<const uint64_t> row) const {
        VertexSet s(n_);
        for_each_in_row(row, [&](int v) { s.insert(v); });
        return s;
    }
    template <typename F>
    void for_each_in_row(std::span<const uint64_t> row, F&& f) const {
        for (int wi = 0; wi < words_; ++wi) {
            uint64_t w = row[wi];
            while (w) {
                int b = std::countr_zero(w);
                f((wi << 6) + b);
                w &= w - 1;
            }
        }
    }

    int n_ = 0;
    int words_ = 0;
    int64_t arcs_ = 0;
    std::vector<uint64_t> out_, in_;
};

struct SemiDegrees {
    int delta_out = 0;
    int delta_in = 0;
    int delta0 = 0;     // min over v of min(deg+, deg-)
    int delta_total = 0; // min over v of deg+ + deg-
};

SemiDegrees semi_degrees(const Digraph& d);

// Number of arcs (a,b) with a in A, b in B (ordered pairs; arcs internal to
// A ∩ B counted once per ordered pair).
int64_t arc_count(const Digraph& d, const VertexSet& a, const VertexSet& b);

// Max over a in A of deg+(a, B), and the in-side twin.
int max_out_degree_into(const Digraph& d, const VertexSet& a, const VertexSet& b);
int max_in_degree_from(const Digraph& d, const VertexSet& b, const VertexSet& a);

struct InducedSubdigraph {
    Digraph graph;
    std::vector<int> vertices; // vertices[new_id] = original id
};

InducedSubdigraph induced(const Digraph& d, const VertexSet& s);

} // namespace adhc
