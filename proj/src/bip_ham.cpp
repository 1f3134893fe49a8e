#include "adhc/bip_ham.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace adhc {
namespace detail {

namespace {

// Pósa-style walk state: path with O(1) position lookup, suffix-reversal
// rotations.
struct PathState {
    std::vector<int> path;
    std::vector<int> pos; // pos[v] = index in path, -1 if absent

    explicit PathState(int n) : pos(n, -1) {}

    void push(int v) {
        pos[v] = (int)path.size();
        path.push_back(v);
    }
    // rotate at i: path becomes path[0..i] + reverse(path[i+1..end])
    void rotate(int i) {
        std::reverse(path.begin() + i + 1, path.end());
        for (size_t j = i + 1; j < path.size(); ++j) pos[path[j]] = (int)j;
    }
    bool on_path(int v) const { return pos[v] >= 0; }
};

int random_unused_neighbor(const UGraph& g, const PathState& st, int v, std::mt19937_64& rng) {
    int chosen = -1, seen = 0;
    g.for_each_nbr(v, [&](int w) {
        if (st.on_path(w)) return;
        ++seen;
        if ((int)(rng() % seen) == 0) chosen = w;
    });
    return chosen;
}

} // namespace

std::optional<std::vector<int>> rotation_extension_hc(const UGraph& g, int restarts,
                                                      uint64_t seed) {
    const int n = g.size();
    if (n < 3) return std::nullopt;
    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + r + 1);
        PathState st(n);
        st.push((int)(rng() % n));
        int idle = 0;
        const int idle_cap = 2 * n + 16;
        while (idle < idle_cap) {
            int end = st.path.back();
            if (int w = random_unused_neighbor(g, st, end, rng); w >= 0) {
                st.push(w);
                idle = 0;
                continue;
            }
            if ((int)st.path.size() == n) {
                int start = st.path.front();
                if (g.has_edge(end, start)) return st.path;
                // crossing closure: start ~ path[i+1] and end ~ path[i]
                for (int i = 0; i + 1 < n; ++i) {
                    if (g.has_edge(start, st.path[i + 1]) && g.has_edge(end, st.path[i])) {
                        st.rotate(i);
                        return st.path;
                    }
                }
            }
            // rotate at a random neighbor of the endpoint
            int pivot = -1, seen = 0;
            g.for_each_nbr(end, [&](int w) {
                int i = st.pos[w];
                if (i < 0 || i >= (int)st.path.size() - 2) return;
                ++seen;
                if ((int)(rng() % seen) == 0) pivot = i;
            });
            if (pivot < 0) break; // endpoint has nowhere to go
            st.rotate(pivot);
            ++idle;
        }
    }
    return std::nullopt;
}

// Every cycle cover is a spanning 2-regular subgraph; feasibility is a tiny
// unit-capacity flow (2 per vertex, 1 per edge).  A failed flow rules out
// Hamiltonian cycles and 2-factors alike.
bool two_factor_feasible(const UGraph& g, int left_count) {
    const int n = g.size();
    const int right_count = n - left_count;
    if (left_count != right_count) return false;
    // Dinic on source(=n) -> left -> right -> sink(=n+1)
    const int S = n, T = n + 1, V = n + 2;
    struct Edge {
        int to, cap, rev;
    };
    std::vector<std::vector<Edge>> adj(V);
    auto add = [&](int a, int b, int cap) {
        adj[a].push_back({b, cap, (int)adj[b].size()});
        adj[b].push_back({a, 0, (int)adj[a].size() - 1});
    };
    for (int u = 0; u < left_count; ++u) {
        add(S, u, 2);
        g.for_each_nbr(u, [&](int w) { add(u, w, 1); });
    }
    for (int w = left_count; w < n; ++w) add(w, T, 2);

    std::vector<int> level(V), it(V);
    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> q{S};
        level[S] = 0;
        for (size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (auto& e : adj[v])
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    q.push_back(e.to);
                }
        }
        return level[T] >= 0;
    };
    std::function<int(int, int)> dfs = [&](int v, int f) -> int {
        if (v == T) return f;
        for (int& i = it[v]; i < (int)adj[v].size(); ++i) {
            auto& e = adj[v][i];
            if (e.cap > 0 && level[e.to] == level[v] + 1) {
                int got = dfs(e.to, std::min(f, e.cap));
                if (got > 0) {
                    e.cap -= got;
                    adj[e.to][e.rev].cap += got;
                    return got;
                }
            }
        }
        return 0;
    };
    int flow = 0;
    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        while (int f = dfs(S, 1 << 30)) flow += f;
    }
    return flow == n;
}

namespace {

struct CoverSearch {
    const UGraph& g;
    uint64_t budget;
    uint64_t* nodes;
    int n;
    int words;
    std::vector<int8_t> used;
    int used_count = 0;
    std::vector<int> deg_unused;
    std::vector<int> cur;
    int cur_start = -1;
    std::vector<std::vector<int>> done_cycles;
    bool over = false;
    std::vector<uint64_t> unused_mask, frontier, comp, scratch, next_buf;

    CoverSearch(const UGraph& graph, uint64_t node_limit, uint64_t* node_counter)
        : g(graph), budget(node_limit), nodes(node_counter), n(graph.size()),
          words(VertexSet::words_for(graph.size())), used(n, 0), deg_unused(n, 0),
          unused_mask(words, 0), frontier(words), comp(words), scratch(words),
          next_buf(words) {
        for (int v = 0; v < n; ++v) deg_unused[v] = g.degree(v);
        for (int v = 0; v < n; ++v) unused_mask[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void take(int v) {
        used[v] = 1;
        ++used_count;
        unused_mask[v >> 6] &= ~(uint64_t{1} << (v & 63));
        g.for_each_nbr(v, [&](int w) { --deg_unused[w]; });
    }
    void release(int v) {
        used[v] = 0;
        --used_count;
        unused_mask[v >> 6] |= uint64_t{1} << (v & 63);
        g.for_each_nbr(v, [&](int w) { ++deg_unused[w]; });
    }

    // A vertex that cannot reach two future cycle-neighbors is dead.  Ends
    // available to unused vertices are the live path end and its cycle start.
    bool feasible(int end) const {
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int avail = deg_unused[v];
            if (avail >= 2) continue;
            if (end >= 0 && g.has_edge(v, end)) ++avail;
            if (cur_start >= 0 && g.has_edge(v, cur_start)) ++avail;
            if (avail < 2) return false;
        }
        return true;
    }

    bool row_intersects(int v, const uint64_t* mask) const {
        const uint64_t* r = g.row(v);
        for (int i = 0; i < words; ++i)
            if (r[i] & mask[i]) return true;
        return false;
    }

    // Components of the unused-induced graph limit how the cover can finish:
    // the live cycle can flow into at most one of them, every other one needs
    // a fresh cycle of its own (so at least 4 vertices and spare budget).
    bool components_ok(int end, int cycles_left) {
        if (used_count == n) return true;
        int stranded_needed = 0;
        int comps = 0;
        std::copy(unused_mask.begin(), unused_mask.end(), scratch.begin());
        bool end_adjacent_any = false;
        while (true) {
            int seed = -1;
            for (int i = 0; i < words && seed < 0; ++i)
                if (scratch[i]) seed = (i << 6) + std::countr_zero(scratch[i]);
            if (seed < 0) break;
            ++comps;
            std::fill(comp.begin(), comp.end(), 0);
            comp[seed >> 6] |= uint64_t{1} << (seed & 63);
            std::copy(comp.begin(), comp.end(), frontier.begin());
            int size = 1;
            while (true) {
                bool any = false;
                std::fill(next_buf.begin(), next_buf.end(), 0);
                for (int i = 0; i < words; ++i) {
                    uint64_t f = frontier[i];
                    while (f) {
                        int v = (i << 6) + std::countr_zero(f);
                        f &= f - 1;
                        const uint64_t* r = g.row(v);
                        for (int k = 0; k < words; ++k) next_buf[k] |= r[k] & scratch[k];
                    }
                }
                for (int k = 0; k < words; ++k) {
                    uint64_t add = next_buf[k] & ~comp[k];
                    if (add) {
                        comp[k] |= add;
                        size += std::popcount(add);
                        any = true;
                    }
                    frontier[k] = add;
                }
                if (!any) break;
            }
            for (int i = 0; i < words; ++i) scratch[i] &= ~comp[i];

            bool end_adj = end >= 0 && row_intersects(end, comp.data());
            if (end_adj) end_adjacent_any = true;
            if (!end_adj) {
                if (size < 4) return false; // needs its own cycle, too small
                ++stranded_needed;
            }
        }
        if (comps > cycles_left) return false;
        if (stranded_needed > cycles_left - 1) return false;
        if (cycles_left == 1) {
            // single remaining cycle must run end -> unused -> start
            if (!end_adjacent_any) return false;
            if (cur_start >= 0 && !row_intersects(cur_start, unused_mask.data())) return false;
        }
        return true;
    }

    bool search(int cycles_left) {
        if (*nodes >= budget) {
            over = true;
            return false;
        }
        ++*nodes;
        int end = cur.back();

        if ((int)cur.size() >= 4 && g.has_edge(end, cur_start)) {
            done_cycles.push_back(cur);
            if (used_count == n) return true;
            if (cycles_left > 1 && n - used_count >= 4) {
                int s = 0;
                while (used[s]) ++s;
                std::vector<int> saved = std::move(cur);
                int saved_start = cur_start;
                cur = {s};
                cur_start = s;
                take(s);
                bool ok = feasible(s) && components_ok(s, cycles_left - 1) &&
                          search(cycles_left - 1);
                release(s);
                cur = std::move(saved);
                cur_start = saved_start;
                if (ok) return true;
                if (over) {
                    done_cycles.pop_back();
                    return false;
                }
            }
            done_cycles.pop_back();
        }

        bool found = false;
        g.for_each_nbr(end, [&](int w) {
            if (found || over || used[w]) return;
            cur.push_back(w);
            take(w);
            if (feasible(w) && components_ok(w, cycles_left) && search(cycles_left))
                found = true;
            if (!found) {
                release(w);
                cur.pop_back();
            }
        });
        return found;
    }
};

} // namespace

CycleCoverResult cycle_cover(const UGraph& g, int max_cycles, uint64_t node_limit,
                             uint64_t* nodes_used) {
    CycleCoverResult r;
    uint64_t local = 0;
    uint64_t* nodes = nodes_used ? nodes_used : &local;
    const int n = g.size();
    if (n == 0 || n < 4 || max_cycles < 1) {
        r.status = SolveStatus::absent;
        return r;
    }
    CoverSearch s(g, node_limit, nodes);
    s.cur = {0};
    s.cur_start = 0;
    s.take(0);
    if (s.feasible(0) && s.components_ok(0, max_cycles) && s.search(max_cycles)) {
        r.status = SolveStatus::found;
        r.cycles = std::move(s.done_cycles);
    } else {
        r.status = s.over ? SolveStatus::budget_exceeded : SolveStatus::absent;
    }
    return r;
}

HamPathResult ham_path_exact(const UGraph& g, int a, int b, uint64_t node_limit,
                             uint64_t* nodes_used) {
    HamPathResult r;
    const int n = g.size();
    if (n == 0) {
        r.status = SolveStatus::absent;
        return r;
    }
    if (n == 1) {
        if (a > 0 || b > 0) {
            r.status = SolveStatus::absent;
            return r;
        }
        r.status = SolveStatus::found;
        r.path = {0};
        return r;
    }
    // Hamiltonian cycle through a virtual vertex adjacent to the admissible
    // ends is exactly a Hamiltonian path between them.
    UGraph aug(n + 1);
    for (int u = 0; u < n; ++u)
        g.for_each_nbr(u, [&](int w) {
            if (u < w) aug.add_edge(u, w);
        });
    if (a >= 0 && b >= 0) {
        if (a == b) throw std::invalid_argument("path ends must differ");
        aug.add_edge(n, a);
        aug.add_edge(n, b);
    } else {
        for (int v = 0; v < n; ++v) aug.add_edge(n, v);
    }
    auto cover = cycle_cover(aug, 1, node_limit, nodes_used);
    r.status = cover.status;
    if (cover.status != SolveStatus::found) return r;
    auto& cyc = cover.cycles[0];
    int zi = (int)(std::find(cyc.begin(), cyc.end(), n) - cyc.begin());
    r.path.reserve(n);
    for (int i = 1; i <= n; ++i) r.path.push_back(cyc[(zi + i) % cyc.size()]);
    if (a >= 0 && r.path.front() != a) std::reverse(r.path.begin(), r.path.end());
    return r;
}

} // namespace detail

namespace {

detail::UGraph to_ugraph(const BipartiteGraph& g) {
    const int p = g.left_size();
    detail::UGraph u(g.size());
    for (int li = 0; li < p; ++li)
        g.for_each_left_nbr(li, [&](int ri) { u.add_edge(li, p + ri); });
    return u;
}

std::vector<int> to_labels(const BipartiteGraph& g, const std::vector<int>& engine_seq) {
    const int p = g.left_size();
    std::vector<int> out;
    out.reserve(engine_seq.size());
    for (int e : engine_seq)
        out.push_back(e < p ? g.left_label(e) : g.right_label(e - p));
    return out;
}

} // namespace

BipHamResult bip_ham_cycle(const BipartiteGraph& g, const SolverConfig& cfg, uint64_t seed) {
    BipHamResult r;
    if (g.left_size() != g.right_size() || g.size() < 4) {
        r.status = SolveStatus::absent;
        return r;
    }
    auto u = to_ugraph(g);
    if (auto seq = detail::rotation_extension_hc(u, cfg.restarts, seed)) {
        // rotate so the sequence starts on the left side
        std::vector<int> s = *seq;
        if (s[0] >= g.left_size()) std::rotate(s.begin(), s.begin() + 1, s.end());
        r.status = SolveStatus::found;
        r.sequence = to_labels(g, s);
        return r;
    }
    auto cover = detail::cycle_cover(u, 1, cfg.node_limit, &r.nodes);
    r.status = cover.status;
    if (cover.status == SolveStatus::found) {
        std::vector<int> s = cover.cycles[0];
        if (s[0] >= g.left_size()) std::rotate(s.begin(), s.begin() + 1, s.end());
        r.sequence = to_labels(g, s);
    }
    return r;
}

BipHamResult bip_ham_path(const BipartiteGraph& g, int a, int b, const SolverConfig& cfg,
                          uint64_t seed) {
    if (a == b) throw std::invalid_argument("path ends must differ");
    const int p = g.left_size(), q = g.right_size();
    auto find_left = [&](int label) {
        for (int i = 0; i < p; ++i)
            if (g.left_label(i) == label) return i;
        return -1;
    };
    auto find_right = [&](int label) {
        for (int i = 0; i < q; ++i)
            if (g.right_label(i) == label) return i;
        return -1;
    };
    int la = find_left(a), ra = la < 0 ? find_right(a) : -1;
    int lb = find_left(b), rb = lb < 0 ? find_right(b) : -1;
    if ((la < 0 && ra < 0) || (lb < 0 && rb < 0))
        throw std::invalid_argument("path end is not a vertex of the bipartite graph");

    // a spanning path alternates sides, which pins the end placement
    bool a_left = la >= 0, b_left = lb >= 0;
    if (std::abs(p - q) > 1) throw std::invalid_argument("side sizes differ by more than one");
    if (p == q && a_left == b_left)
        throw std::invalid_argument("balanced sides need one end per side");
    if (p == q + 1 && !(a_left && b_left))
        throw std::invalid_argument("both ends must lie in the larger side");
    if (q == p + 1 && (a_left || b_left))
        throw std::invalid_argument("both ends must lie in the larger side");

    int ea = a_left ? la : p + ra;
    int eb = b_left ? lb : p + rb;

    BipHamResult r;
    auto u = to_ugraph(g);

    // rotation-extension on the end-augmented graph, then the exact fallback
    detail::UGraph aug(g.size() + 1);
    for (int v = 0; v < g.size(); ++v)
        u.for_each_nbr(v, [&](int w) {
            if (v < w) aug.add_edge(v, w);
        });
    aug.add_edge(g.size(), ea);
    aug.add_edge(g.size(), eb);
    if (auto seq = detail::rotation_extension_hc(aug, cfg.restarts, seed)) {
        auto& cyc = *seq;
        int zi = (int)(std::find(cyc.begin(), cyc.end(), g.size()) - cyc.begin());
        std::vector<int> path;
        for (size_t i = 1; i <= cyc.size() - 1; ++i) path.push_back(cyc[(zi + i) % cyc.size()]);
        if (path.front() != ea) std::reverse(path.begin(), path.end());
        r.status = SolveStatus::found;
        r.sequence = to_labels(g, path);
        return r;
    }
    auto exact = detail::ham_path_exact(u, ea, eb, cfg.node_limit, &r.nodes);
    r.status = exact.status;
    if (exact.status == SolveStatus::found) r.sequence = to_labels(g, exact.path);
    return r;
}

} // namespace adhc
