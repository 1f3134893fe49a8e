#include "adhc/digraph.hpp"

#include <algorithm>
#include <limits>

namespace adhc {

SemiDegrees semi_degrees(const Digraph& d) {
    SemiDegrees r;
    if (d.order() == 0) return r;
    int dmin_out = std::numeric_limits<int>::max();
    int dmin_in = dmin_out, dmin_tot = dmin_out;
    for (int v = 0; v < d.order(); ++v) {
        int o = d.out_degree(v), i = d.in_degree(v);
        dmin_out = std::min(dmin_out, o);
        dmin_in = std::min(dmin_in, i);
        dmin_tot = std::min(dmin_tot, o + i);
    }
    r.delta_out = dmin_out;
    r.delta_in = dmin_in;
    r.delta0 = std::min(dmin_out, dmin_in);
    r.delta_total = dmin_tot;
    return r;
}

int64_t arc_count(const Digraph& d, const VertexSet& a, const VertexSet& b) {
    int64_t c = 0;
    a.for_each([&](int v) { c += d.out_degree_in(v, b); });
    return c;
}

int max_out_degree_into(const Digraph& d, const VertexSet& a, const VertexSet& b) {
    int m = 0;
    a.for_each([&](int v) { m = std::max(m, d.out_degree_in(v, b)); });
    return m;
}

int max_in_degree_from(const Digraph& d, const VertexSet& b, const VertexSet& a) {
    int m = 0;
    b.for_each([&](int v) { m = std::max(m, d.in_degree_in(v, a)); });
    return m;
}

InducedSubdigraph induced(const Digraph& d, const VertexSet& s) {
    InducedSubdigraph r;
    r.vertices = s.to_vector();
    int m = (int)r.vertices.size();
    std::vector<int> pos(d.order(), -1);
    for (int i = 0; i < m; ++i) pos[r.vertices[i]] = i;
    r.graph = Digraph(m);
    for (int i = 0; i < m; ++i) {
        d.for_each_out(r.vertices[i], [&](int w) {
            if (pos[w] >= 0) r.graph.add_arc(i, pos[w]);
        });
    }
    return r;
}

} // namespace adhc
