#include "adhc/maxcut.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace adhc {

namespace {

// cross arcs (u,v) with u in x0 ∩ X, v in y0 ∩ Y, restricted to E(X,Y)
int64_t cross_arcs(const Digraph& d, const VertexSet& x0, const VertexSet& y0) {
    int64_t c = 0;
    x0.for_each([&](int u) { c += d.out_degree_in(u, y0); });
    return c;
}

} // namespace

MaxcutResult maxcut_partition(const Digraph& d, const VertexSet& x, const VertexSet& y,
                              double c) {
    const int64_t xs = x.count(), ys = y.count();
    const int64_t e = arc_count(d, x, y);
    if ((double)e + 1e-9 < c * (double)xs * (double)ys)
        throw std::invalid_argument("density precondition e(X,Y) >= c|X||Y| violated");

    VertexSet shared = x & y;
    VertexSet x0 = x - shared; // X* grows by X''
    VertexSet y0 = y - shared;
    shared.for_each([&](int v) { x0.insert(v); });
    auto shared_list = shared.to_vector();

    // local moves on X ∩ Y until no single move nor the whole swap improves
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v : shared_list) {
            if (x0.contains(v)) {
                // move to Y side gains in-arcs from X0, loses out-arcs to Y0
                int gain = d.in_degree_in(v, x0) - d.out_degree_in(v, y0);
                if (gain > 0) {
                    x0.erase(v);
                    y0.insert(v);
                    improved = true;
                }
            } else {
                int gain = d.out_degree_in(v, y0) - d.in_degree_in(v, x0);
                if (gain > 0) {
                    y0.erase(v);
                    x0.insert(v);
                    improved = true;
                }
            }
        }
        if (!improved && !shared_list.empty()) {
            // swapping the whole shared partition bounds e(Y0,X0) by the cut
            VertexSet xs2 = x - shared, ys2 = y - shared;
            for (int v : shared_list) {
                if (x0.contains(v)) ys2.insert(v);
                else xs2.insert(v);
            }
            if (cross_arcs(d, xs2, ys2) > cross_arcs(d, x0, y0)) {
                x0 = xs2;
                y0 = ys2;
                improved = true;
            }
        }
    }

    // delete deficient vertices, lowest index first
    const double tx = c / 8.0 * (double)ys; // out-degree floor for X'
    const double ty = c / 8.0 * (double)xs; // in-degree floor for Y'
    bool deleted = true;
    while (deleted) {
        deleted = false;
        for (int v = 0; v < d.order(); ++v) {
            if (x0.contains(v) && (double)d.out_degree_in(v, y0) < tx) {
                x0.erase(v);
                deleted = true;
            } else if (y0.contains(v) && (double)d.in_degree_in(v, x0) < ty) {
                y0.erase(v);
                deleted = true;
            }
        }
    }

    if (x0.empty() || y0.empty())
        throw std::logic_error("maxcut deletion emptied a side despite the density precondition");
    return {x0, y0};
}

OrientedWalk proper_adp_from_dense_pair(const Digraph& d, const VertexSet& x,
                                        const VertexSet& y, double c) {
    auto cut = maxcut_partition(d, x, y, c);
    auto xs = cut.x.to_vector();
    auto ys = cut.y.to_vector();
    const int p = (int)xs.size(), q = (int)ys.size();

    // auxiliary bipartite graph: position i < p is X'-side
    auto adj = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (a >= p || b < p) return false;
        return d.has_arc(xs[a], ys[b - p]);
    };

    // greedy maximal path: extend both ends by the lowest admissible vertex
    std::vector<int8_t> used(p + q, 0);
    std::deque<int> path;
    path.push_back(0);
    used[0] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int side = 0; side < 2; ++side) {
            int end = side == 0 ? path.back() : path.front();
            for (int w = 0; w < p + q; ++w) {
                if (used[w] || !adj(end, w)) continue;
                if (side == 0) path.push_back(w);
                else path.push_front(w);
                used[w] = 1;
                grew = true;
                break;
            }
        }
    }

    // extract the longest even-length subpath starting on the X' side
    std::vector<int> base(path.begin(), path.end());
    std::vector<int> best;
    for (int rev = 0; rev < 2; ++rev) {
        for (int drop = 0; drop < 2 && drop < (int)base.size(); ++drop) {
            std::vector<int> cand(base.begin() + drop, base.end());
            if (cand.empty() || cand.front() >= p) continue;
            if (cand.size() % 2 != 0) cand.pop_back();
            if (cand.size() > best.size()) best = cand;
        }
        std::reverse(base.begin(), base.end());
    }

    std::vector<int> hosts;
    hosts.reserve(best.size());
    for (int e : best) hosts.push_back(e < p ? xs[e] : ys[e - p]);
    OrientedWalk w = OrientedWalk::proper_path(std::move(hosts));
    WalkRequire req;
    req.anti_directed = true;
    req.proper = true;
    if (!verify_walk(d, w, req)) throw std::logic_error("dense-pair path failed verification");
    const double bound = c / 4.0 * (double)std::min(x.count(), y.count());
    if ((double)w.size() + 1e-9 < bound)
        throw std::logic_error("dense-pair path shorter than the guaranteed bound");
    return w;
}

} // namespace adhc
