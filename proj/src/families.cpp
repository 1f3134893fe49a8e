#include "adhc/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace adhc {

namespace {

// Canonical index blocks: Y_1 = [0,k), X_1 = [k,n/2), Y_2 = [n/2,n/2+k),
// X_2 = [n/2+k,n).
struct Blocks {
    int n, k;
    int y1_lo, x1_lo, y2_lo, x2_lo;
    Blocks(int n_, int k_) : n(n_), k(k_), y1_lo(0), x1_lo(k_), y2_lo(n_ / 2), x2_lo(n_ / 2 + k_) {}
    bool in_y1(int v) const { return v >= y1_lo && v < x1_lo; }
    bool in_x1(int v) const { return v >= x1_lo && v < y2_lo; }
    bool in_y2(int v) const { return v >= y2_lo && v < x2_lo; }
    bool in_x2(int v) const { return v >= x2_lo && v < n; }
};

void fill_labels(const Blocks& b, FLabels* labels) {
    if (!labels) return;
    labels->y1 = VertexSet(b.n);
    labels->x1 = VertexSet(b.n);
    labels->y2 = VertexSet(b.n);
    labels->x2 = VertexSet(b.n);
    for (int v = 0; v < b.n; ++v) {
        if (b.in_y1(v)) labels->y1.insert(v);
        else if (b.in_x1(v)) labels->x1.insert(v);
        else if (b.in_y2(v)) labels->y2.insert(v);
        else labels->x2.insert(v);
    }
    labels->y1_vertex = b.k == 1 ? b.y1_lo : -1;
    labels->y2_vertex = b.k == 1 ? b.y2_lo : -1;
}

} // namespace

Digraph gen_F(int n, int k, FLabels* labels) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("order must be even and >= 2");
    if (k < 0 || k > n / 2) throw std::invalid_argument("k must satisfy 0 <= k <= n/2");
    Blocks b(n, k);
    Digraph d(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            bool arc = false;
            if (b.in_y1(u)) arc = b.in_y1(v) || b.in_x1(v);
            else if (b.in_y2(u)) arc = b.in_y2(v) || b.in_x2(v);
            else if (b.in_x1(u)) arc = b.in_y2(v) || b.in_x2(v);
            else arc = b.in_y1(v) || b.in_x1(v);
            if (arc) d.add_arc(u, v);
        }
    }
    fill_labels(b, labels);
    return d;
}

Digraph gen_F1(int n, FLabels* labels) {
    if (n < 4) throw std::invalid_argument("first exception needs order >= 4");
    Digraph d = gen_F(n, 1, labels);
    Blocks b(n, 1);
    d.add_arc(b.y1_lo, b.y2_lo);
    d.add_arc(b.y2_lo, b.y1_lo);
    return d;
}

Digraph gen_F2(int n, FLabels* labels) {
    if (n < 4) throw std::invalid_argument("second exception needs order >= 4");
    Digraph d = gen_F(n, 1, labels);
    Blocks b(n, 1);
    int x = b.x1_lo; // lowest-index X_1 vertex
    d.add_arc(b.y1_lo, b.y2_lo);
    d.add_arc(b.y2_lo, x);
    d.add_arc(x, b.y1_lo);
    if (labels) labels->x_special = x;
    return d;
}

BipartiteGraph gen_ladder(int n) {
    if (n < 1) throw std::invalid_argument("ladder needs n >= 1");
    std::vector<int> left(n), right(n);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), n);
    BipartiteGraph g(std::move(left), std::move(right));
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j) g.add_edge(i, j);
    return g;
}

Digraph gen_anti_ladder(int n) {
    if (n < 1) throw std::invalid_argument("ladder needs n >= 1");
    Digraph d(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j) d.add_arc(i, n + j);
    return d;
}

Digraph gen_oriented_cycle(const std::vector<uint8_t>& pattern) {
    const int len = (int)pattern.size();
    if (len < 3) throw std::invalid_argument("cycle pattern needs length >= 3");
    Digraph d(len);
    for (int i = 0; i < len; ++i) {
        int j = (i + 1) % len;
        if (pattern[i]) d.add_arc(i, j);
        else d.add_arc(j, i);
    }
    return d;
}

Digraph gen_anti_cycle(int length) {
    if (length % 2 != 0)
        throw std::invalid_argument("an alternating cycle orientation cannot have odd length");
    if (length < 4) throw std::invalid_argument("anti-directed cycle needs length >= 4");
    std::vector<uint8_t> pattern(length);
    for (int i = 0; i < length; ++i) pattern[i] = (i % 2 == 0);
    return gen_oriented_cycle(pattern);
}

Digraph gen_complete(int n) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) d.add_arc(u, v);
    return d;
}

Digraph gen_random_min_semidegree(int n, int deg, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (deg < 0 || deg > n - 1) throw std::invalid_argument("semi-degree target infeasible");
    std::mt19937_64 rng(seed);
    Digraph d(n);
    const double p = n > 1 ? double(deg) / (n - 1) : 0.0;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) d.add_arc(u, v);

    // greedy arc repair lifts every deficient vertex
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int v = 0; v < n; ++v) {
        if (d.out_degree(v) < deg) {
            std::shuffle(pool.begin(), pool.end(), rng);
            for (int w : pool) {
                if (d.out_degree(v) >= deg) break;
                if (w != v && !d.has_arc(v, w)) d.add_arc(v, w);
            }
        }
        if (d.in_degree(v) < deg) {
            std::shuffle(pool.begin(), pool.end(), rng);
            for (int w : pool) {
                if (d.in_degree(v) >= deg) break;
                if (w != v && !d.has_arc(w, v)) d.add_arc(w, v);
            }
        }
    }
    return d;
}

namespace {

bool matches_under(const Digraph& d, const Digraph& canon, const std::vector<int>& to_canonical) {
    const int n = d.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (d.has_arc(u, v) != canon.has_arc(to_canonical[u], to_canonical[v])) return false;
        }
    return true;
}

// to_canonical built from the discovered role of every host vertex
std::vector<int> build_map(int n, int m, int y1, const std::vector<int>& x1, int y2,
                           const std::vector<int>& x2, int x_special) {
    std::vector<int> map(n, -1);
    map[y1] = 0;
    int next = 1;
    if (x_special >= 0) map[x_special] = next++;
    for (int v : x1)
        if (v != x_special) map[v] = next++;
    map[y2] = m;
    next = m + 1;
    for (int v : x2) map[v] = next++;
    return map;
}

RecognizeResult brute_force_small(const Digraph& d) {
    const int n = d.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (auto [kind, canon] : {std::pair{ExceptionKind::f1, gen_F1(n)},
                               std::pair{ExceptionKind::f2, gen_F2(n)}}) {
        if (d.arc_count() != canon.arc_count()) continue;
        std::sort(perm.begin(), perm.end());
        do {
            if (matches_under(d, canon, perm)) return {kind, perm};
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {};
}

} // namespace

RecognizeResult recognize_exception(const Digraph& d) {
    const int n = d.order();
    if (n < 4 || n % 2 != 0) return {};
    const int m = n / 2;
    if (n <= 6) return brute_force_small(d);

    const int64_t f1_arcs = int64_t(n) * n / 2;
    if (d.arc_count() != f1_arcs && d.arc_count() != f1_arcs + 1) return {};

    // digon degree separates X vertices (digon-joined to the opposite X side)
    // from the two y vertices
    std::vector<int> digon_deg(n, 0);
    std::vector<int> digon_nbr(n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && d.has_arc(u, v) && d.has_arc(v, u)) {
                ++digon_deg[u];
                digon_nbr[u] = v;
            }

    if (d.arc_count() == f1_arcs) {
        // first exception: everyone has semi-degree m, y_1 <-> y_2 is the
        // unique digon not between the X sides
        for (int v = 0; v < n; ++v)
            if (d.out_degree(v) != m || d.in_degree(v) != m) return {};
        std::vector<int> low;
        for (int v = 0; v < n; ++v)
            if (digon_deg[v] == 1) low.push_back(v);
        if (low.size() != 2 || digon_nbr[low[0]] != low[1]) return {};
        for (auto [a, b] : {std::pair{low[0], low[1]}, std::pair{low[1], low[0]}}) {
            // out(y_1) = X_1 + y_2, out(y_2) = X_2 + y_1
            auto x1 = d.out_set(a);
            x1.erase(b);
            auto x2 = d.out_set(b);
            x2.erase(a);
            if (x1.count() != m - 1 || x2.count() != m - 1 || x1.intersects(x2)) continue;
            if (x1.contains(a) || x1.contains(b) || x2.contains(a) || x2.contains(b)) continue;
            auto map = build_map(n, m, a, x1.to_vector(), b, x2.to_vector(), -1);
            if (matches_under(d, gen_F1(n), map)) return {ExceptionKind::f1, map};
        }
        return {};
    }

    // second exception: x is the unique vertex of semi-degree m+1; the added
    // arcs turn x <-> y_1 and x <-> y_2 into the only digons touching the y
    // vertices, so both have digon degree 1 with partner x
    int xs = -1;
    for (int v = 0; v < n; ++v) {
        int o = d.out_degree(v), i = d.in_degree(v);
        if (o == m + 1 && i == m + 1) {
            if (xs >= 0) return {};
            xs = v;
        } else if (o != m || i != m) {
            return {};
        }
    }
    if (xs < 0) return {};
    std::vector<int> iso;
    for (int v = 0; v < n; ++v)
        if (digon_deg[v] == 1 && digon_nbr[v] == xs) iso.push_back(v);
    if (iso.size() != 2) return {};
    for (auto [a, b] : {std::pair{iso[0], iso[1]}, std::pair{iso[1], iso[0]}}) {
        if (!d.has_arc(a, b) || !d.has_arc(b, xs) || !d.has_arc(xs, a)) continue;
        auto x1 = d.out_set(a);
        x1.erase(b);
        auto x2 = d.out_set(b);
        x2.erase(xs);
        if (!x1.contains(xs)) continue;
        if (x1.count() != m - 1 || x2.count() != m - 1 || x1.intersects(x2)) continue;
        auto map = build_map(n, m, a, x1.to_vector(), b, x2.to_vector(), xs);
        if (matches_under(d, gen_F2(n), map)) return {ExceptionKind::f2, map};
    }
    return {};
}

} // namespace adhc
