#include "adhc/stars.hpp"

#include <stdexcept>

namespace adhc {

StarPacking two_in_star_packing(const Digraph& d) {
    const int n = d.order();
    StarPacking p{};

    // two independent arcs, lexicographically first
    int a1 = -1, b1 = -1, a2 = -1, b2 = -1;
    for (int u = 0; u < n && a2 < 0; ++u) {
        d.for_each_out(u, [&](int v) {
            if (a2 >= 0) return;
            if (a1 < 0) {
                a1 = u;
                b1 = v;
                return;
            }
            if (u != a1 && u != b1 && v != a1 && v != b1) {
                a2 = u;
                b2 = v;
            }
        });
    }
    if (a2 < 0) throw std::runtime_error("no two independent arcs exist");
    p.arcs = {std::pair{a1, b1}, std::pair{a2, b2}};

    VertexSet free = VertexSet::all(n);
    for (int v : {a1, b1, a2, b2}) free.erase(v);

    // repeatedly take the lowest center with two free in-neighbours
    bool again = true;
    while (again) {
        again = false;
        for (int w = free.next(0); w >= 0; w = free.next(w + 1)) {
            VertexSet ins = d.in_set(w) & free;
            ins.erase(w);
            if (ins.count() < 2) continue;
            int l1 = ins.next(0);
            int l2 = ins.next(l1 + 1);
            p.stars.push_back({w, l1, l2});
            free.erase(w);
            free.erase(l1);
            free.erase(l2);
            again = true;
            break;
        }
    }
    return p;
}

double star_packing_floor(int n, int min_out, int max_in) {
    return ((double)(min_out - 1) * n - 4.0 * (min_out - 1 + max_in)) /
           (3.0 * (min_out + max_in - 1));
}

} // namespace adhc
