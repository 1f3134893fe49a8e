#include "adhc/exact.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace adhc {

namespace {

using detail::UGraph;

constexpr int8_t kUnknown = 0, kSource = 1, kSink = 2;

// Branch on source/sink roles.  A source needs two out-neighbours that can
// still be sinks, a sink two in-neighbours that can still be sources; both
// counts are maintained incrementally and drive unit propagation.
struct RoleSearch {
    const Digraph& d;
    int n;
    int max_cycles;
    uint64_t budget;
    uint64_t nodes = 0;
    bool over = false;

    std::vector<int8_t> role;
    std::vector<int> pot_out; // out-nbrs assigned sink or unassigned
    std::vector<int> pot_in;  // in-nbrs assigned source or unassigned
    int n_src = 0, n_snk = 0;
    std::vector<int> trail;
    std::vector<int> order;

    std::vector<std::vector<int>> cycles; // host-vertex cycles of the cover

    RoleSearch(const Digraph& dig, int k, const SolverConfig& cfg)
        : d(dig), n(dig.order()), max_cycles(k), budget(cfg.node_limit), role(n, kUnknown),
          pot_out(n), pot_in(n) {
        for (int v = 0; v < n; ++v) {
            pot_out[v] = d.out_degree(v);
            pot_in[v] = d.in_degree(v);
        }
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        if (cfg.branch_rule == SolverConfig::BranchRule::min_domain) {
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return std::min(pot_out[a], pot_in[a]) < std::min(pot_out[b], pot_in[b]);
            });
        }
    }

    bool assign(int v0, int8_t r0) {
        std::vector<std::pair<int, int8_t>> queue{{v0, r0}};
        while (!queue.empty()) {
            auto [v, r] = queue.back();
            queue.pop_back();
            if (role[v] == r) continue;
            if (role[v] != kUnknown) return false;
            if (r == kSource && pot_out[v] < 2) return false;
            if (r == kSink && pot_in[v] < 2) return false;
            role[v] = r;
            trail.push_back(v);
            if (r == kSource) {
                if (++n_src > n / 2) return false;
                bool fail = false;
                d.for_each_in(v, [&](int w) {
                    if (--pot_out[w] < 2) {
                        if (role[w] == kSource) fail = true;
                        else if (role[w] == kUnknown) queue.push_back({w, kSink});
                    }
                });
                if (fail) return false;
                if (n_src == n / 2)
                    for (int u = 0; u < n; ++u)
                        if (role[u] == kUnknown) queue.push_back({u, kSink});
            } else {
                if (++n_snk > n / 2) return false;
                bool fail = false;
                d.for_each_out(v, [&](int w) {
                    if (--pot_in[w] < 2) {
                        if (role[w] == kSink) fail = true;
                        else if (role[w] == kUnknown) queue.push_back({w, kSource});
                    }
                });
                if (fail) return false;
                if (n_snk == n / 2)
                    for (int u = 0; u < n; ++u)
                        if (role[u] == kUnknown) queue.push_back({u, kSource});
            }
        }
        return true;
    }

    void undo(size_t mark) {
        while (trail.size() > mark) {
            int v = trail.back();
            trail.pop_back();
            if (role[v] == kSource) {
                --n_src;
                d.for_each_in(v, [&](int w) { ++pot_out[w]; });
            } else {
                --n_snk;
                d.for_each_out(v, [&](int w) { ++pot_in[w]; });
            }
            role[v] = kUnknown;
        }
    }

    bool leaf() {
        std::vector<int> src, snk;
        src.reserve(n / 2);
        snk.reserve(n / 2);
        for (int v = 0; v < n; ++v) (role[v] == kSource ? src : snk).push_back(v);

        UGraph g(n);
        std::vector<int> engine_of(n, -1);
        for (int i = 0; i < (int)src.size(); ++i) engine_of[src[i]] = i;
        for (int i = 0; i < (int)snk.size(); ++i) engine_of[snk[i]] = (int)src.size() + i;
        for (int s : src)
            d.for_each_out(s, [&](int t) {
                if (role[t] == kSink) g.add_edge(engine_of[s], engine_of[t]);
            });

        if (component_count(g) > max_cycles) return false;
        if (!detail::two_factor_feasible(g, (int)src.size())) return false;

        // a near-free shot at the common case before the exact search
        if (max_cycles >= 1) {
            if (auto seq = detail::rotation_extension_hc(g, 2, 0x714ac1 + nodes)) {
                cycles.clear();
                std::vector<int> host;
                host.reserve(seq->size());
                int rot = 0;
                while ((*seq)[rot] >= (int)src.size()) ++rot; // open on a source
                for (size_t k = 0; k < seq->size(); ++k) {
                    int e = (*seq)[(rot + k) % seq->size()];
                    host.push_back(e < (int)src.size() ? src[e] : snk[e - src.size()]);
                }
                cycles.push_back(std::move(host));
                return true;
            }
        }

        // nodes is shared, so the cap stays absolute
        auto cover = detail::cycle_cover(g, max_cycles, budget, &nodes);
        if (cover.status == SolveStatus::budget_exceeded) {
            over = true;
            return false;
        }
        if (cover.status != SolveStatus::found) return false;
        cycles.clear();
        for (auto& cyc : cover.cycles) {
            std::vector<int> host;
            host.reserve(cyc.size());
            for (int e : cyc) host.push_back(e < (int)src.size() ? src[e] : snk[e - src.size()]);
            cycles.push_back(std::move(host));
        }
        return true;
    }

    static int component_count(const UGraph& g) {
        int n = g.size(), comps = 0;
        std::vector<int8_t> seen(n, 0);
        std::vector<int> stack;
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            ++comps;
            seen[v] = 1;
            stack.push_back(v);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                g.for_each_nbr(u, [&](int w) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                });
            }
        }
        return comps;
    }

    bool search() {
        if (nodes >= budget) {
            over = true;
            return false;
        }
        ++nodes;
        int v = -1;
        for (int u : order)
            if (role[u] == kUnknown) {
                v = u;
                break;
            }
        if (v < 0) return leaf();
        for (int8_t r : {kSource, kSink}) {
            size_t mark = trail.size();
            if (assign(v, r) && search()) return true;
            undo(mark);
            if (over) return false;
        }
        return false;
    }
};

// Role reduction shared by the ADHC and anti-directed 2-factor solvers.
SolveStatus role_reduction(const Digraph& d, int max_cycles, const SolverConfig& cfg,
                           std::vector<std::vector<int>>* cycles, uint64_t* nodes) {
    const int n = d.order();
    if (n % 2 != 0 || n < 4) return SolveStatus::absent;
    RoleSearch rs(d, max_cycles, cfg);
    // vertices that cannot fill one role are forced into the other
    for (int v = 0; v < n; ++v) {
        bool can_src = rs.pot_out[v] >= 2, can_snk = rs.pot_in[v] >= 2;
        if (!can_src && !can_snk) return SolveStatus::absent;
        if (!can_src && rs.role[v] == kUnknown) {
            if (!rs.assign(v, kSink)) return SolveStatus::absent;
        } else if (!can_snk && rs.role[v] == kUnknown) {
            if (!rs.assign(v, kSource)) return SolveStatus::absent;
        }
    }
    bool found = rs.search();
    if (nodes) *nodes = rs.nodes;
    if (found) {
        *cycles = std::move(rs.cycles);
        return SolveStatus::found;
    }
    return rs.over ? SolveStatus::budget_exceeded : SolveStatus::absent;
}

// Engine cycles open on a source (source engine indices precede sink ones, so
// the lowest unused vertex starting each cycle is a source); the alternating
// bit pattern therefore lines up as-is.
OrientedWalk role_cycle_to_walk(std::vector<int> cyc) {
    return OrientedWalk::alternating_cycle(std::move(cyc));
}

} // namespace

SolveResult solve_adhc(const Digraph& d, const SolverConfig& cfg) {
    SolveResult r;
    std::vector<std::vector<int>> cycles;
    r.status = role_reduction(d, 1, cfg, &cycles, &r.nodes);
    if (r.status != SolveStatus::found) return r;
    OrientedWalk w = role_cycle_to_walk(std::move(cycles[0]));
    WalkRequire req;
    req.anti_directed = true;
    req.spanning = true;
    if (!verify_walk(d, w, req)) throw std::logic_error("adhc certificate failed verification");
    r.walk = std::move(w);
    return r;
}

TwoFactorResult solve_anti_two_factor(const Digraph& d, int max_cycles,
                                      const SolverConfig& cfg) {
    TwoFactorResult r;
    if (max_cycles < 1) throw std::invalid_argument("max_cycles must be positive");
    if (d.order() % 2 != 0) throw std::invalid_argument("2-factor needs an even order");
    std::vector<std::vector<int>> cycles;
    r.status = role_reduction(d, max_cycles, cfg, &cycles, &r.nodes);
    if (r.status != SolveStatus::found) return r;
    TwoFactorCert cert;
    for (auto& cyc : cycles) cert.cycles.push_back(role_cycle_to_walk(std::move(cyc)));
    if (!verify_two_factor(d, cert)) throw std::logic_error("2-factor certificate failed verification");
    r.cert = std::move(cert);
    return r;
}

SolveResult solve_adhc_naive(const Digraph& d) {
    SolveResult r;
    const int n = d.order();
    if (n % 2 != 0 || n < 4) {
        r.status = SolveStatus::absent;
        return r;
    }
    std::vector<int> seq{0};
    std::vector<int8_t> used(n, 0);
    used[0] = 1;

    // phase: role of position 0 (even positions share it)
    std::function<bool(int, bool)> extend = [&](int len, bool first_is_source) -> bool {
        ++r.nodes;
        if (len == n) {
            // wrap edge between positions n-1 (odd) and 0
            bool last_source = !first_is_source;
            int a = seq[n - 1], b = seq[0];
            return last_source ? d.has_arc(a, b) : d.has_arc(b, a);
        }
        // position p is a source iff (p even) == phase
        bool prev_source = ((len - 1) % 2 == 0) ? first_is_source : !first_is_source;
        int prev = seq[len - 1];
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            bool arc_ok = prev_source ? d.has_arc(prev, w) : d.has_arc(w, prev);
            if (!arc_ok) continue;
            used[w] = 1;
            seq.push_back(w);
            if (extend(len + 1, first_is_source)) return true;
            seq.pop_back();
            used[w] = 0;
        }
        return false;
    };

    for (bool phase : {true, false}) {
        if (extend(1, phase)) {
            OrientedWalk w;
            w.kind = OrientedWalk::Kind::cycle;
            w.verts = seq;
            w.bits.resize(n);
            for (int i = 0; i < n; ++i) w.bits[i] = ((i % 2 == 0) == phase);
            WalkRequire req;
            req.anti_directed = true;
            req.spanning = true;
            if (!verify_walk(d, w, req))
                throw std::logic_error("naive adhc certificate failed verification");
            r.status = SolveStatus::found;
            r.walk = std::move(w);
            return r;
        }
    }
    r.status = SolveStatus::absent;
    return r;
}

SolveResult solve_adhp(const Digraph& d, const SolverConfig& cfg) {
    SolveResult r;
    const int n = d.order();
    if (n <= 1) {
        r.status = SolveStatus::found;
        OrientedWalk w;
        w.kind = OrientedWalk::Kind::path;
        if (n == 1) w.verts = {0};
        r.walk = std::move(w);
        return r;
    }

    std::vector<int> seq;
    std::vector<int8_t> used(n, 0);
    bool over = false;

    // bit j is forward iff (j even) == phase
    std::function<bool(bool)> extend = [&](bool phase) -> bool {
        if (r.nodes >= cfg.node_limit) {
            over = true;
            return false;
        }
        ++r.nodes;
        int len = (int)seq.size();
        if (len == n) return true;
        int prev = seq.back();
        bool forward = ((len - 1) % 2 == 0) == phase;
        bool found = false;
        auto try_next = [&](int w) {
            if (found || over || used[w]) return;
            used[w] = 1;
            seq.push_back(w);
            if (extend(phase)) found = true;
            if (!found) {
                seq.pop_back();
                used[w] = 0;
            }
        };
        if (forward)
            d.for_each_out(prev, try_next);
        else
            d.for_each_in(prev, try_next);
        return found;
    };

    for (bool phase : {true, false}) {
        for (int s = 0; s < n && !over; ++s) {
            seq = {s};
            std::fill(used.begin(), used.end(), 0);
            used[s] = 1;
            if (extend(phase)) {
                OrientedWalk w;
                w.kind = OrientedWalk::Kind::path;
                w.verts = seq;
                w.bits.resize(n - 1);
                for (int j = 0; j < n - 1; ++j) w.bits[j] = ((j % 2 == 0) == phase);
                WalkRequire req;
                req.anti_directed = true;
                req.spanning = true;
                if (!verify_walk(d, w, req))
                    throw std::logic_error("adhp certificate failed verification");
                r.status = SolveStatus::found;
                r.walk = std::move(w);
                return r;
            }
        }
    }
    r.status = over ? SolveStatus::budget_exceeded : SolveStatus::absent;
    return r;
}

SolveResult longest_proper_adp(const Digraph& d, const SolverConfig& cfg) {
    SolveResult r;
    const int n = d.order();
    std::vector<int> seq, best;
    std::vector<int8_t> used(n, 0);
    bool over = false;
    const int max_even = n - (n % 2);

    std::function<void()> extend = [&]() {
        if (r.nodes >= cfg.node_limit) {
            over = true;
            return;
        }
        ++r.nodes;
        int len = (int)seq.size();
        if (len % 2 == 0 && len > (int)best.size()) best = seq;
        if ((int)best.size() == max_even) return;
        int prev = seq.back();
        bool forward = ((len - 1) % 2 == 0); // proper: first bit forward
        auto try_next = [&](int w) {
            if (over || used[w] || (int)best.size() == max_even) return;
            used[w] = 1;
            seq.push_back(w);
            extend();
            seq.pop_back();
            used[w] = 0;
        };
        if (forward)
            d.for_each_out(prev, try_next);
        else
            d.for_each_in(prev, try_next);
    };

    for (int s = 0; s < n && !over && (int)best.size() < max_even; ++s) {
        seq = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        extend();
    }

    OrientedWalk w = OrientedWalk::proper_path(best);
    WalkRequire req;
    req.anti_directed = true;
    req.proper = true;
    if (!verify_walk(d, w, req)) throw std::logic_error("proper adp failed verification");
    r.status = over ? SolveStatus::budget_exceeded : SolveStatus::found;
    r.walk = std::move(w);
    return r;
}

SolveResult solve_directed_hc(const Digraph& d, const SolverConfig& cfg) {
    SolveResult r;
    const int n = d.order();
    if (n < 2) {
        r.status = SolveStatus::absent;
        return r;
    }
    std::vector<int> seq{0};
    std::vector<int8_t> used(n, 0);
    used[0] = 1;
    bool over = false;

    auto feasible = [&](int end) {
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int out_avail = 0, in_avail = 0;
            d.for_each_out(v, [&](int w) {
                if (!used[w] || w == 0) ++out_avail;
            });
            d.for_each_in(v, [&](int w) {
                if (!used[w] || w == end) ++in_avail;
            });
            if (out_avail == 0 || in_avail == 0) return false;
        }
        return true;
    };

    std::function<bool()> extend = [&]() -> bool {
        if (r.nodes >= cfg.node_limit) {
            over = true;
            return false;
        }
        ++r.nodes;
        int end = seq.back();
        if ((int)seq.size() == n) return d.has_arc(end, 0);
        bool found = false;
        d.for_each_out(end, [&](int w) {
            if (found || over || used[w]) return;
            used[w] = 1;
            seq.push_back(w);
            if (feasible(w) && extend()) found = true;
            if (!found) {
                seq.pop_back();
                used[w] = 0;
            }
        });
        return found;
    };

    if (feasible(0) && extend()) {
        OrientedWalk w = OrientedWalk::directed_cycle(seq);
        WalkRequire req;
        req.directed = true;
        req.spanning = true;
        if (!verify_walk(d, w, req)) throw std::logic_error("dhc certificate failed verification");
        r.status = SolveStatus::found;
        r.walk = std::move(w);
        return r;
    }
    r.status = over ? SolveStatus::budget_exceeded : SolveStatus::absent;
    return r;
}

EmbedResult embed_spanning(const Digraph& host, const Digraph& pattern,
                           const SolverConfig& cfg) {
    EmbedResult r;
    const int n = host.order();
    if (pattern.order() != n) throw std::invalid_argument("host and pattern orders differ");
    if (n == 0) {
        r.status = SolveStatus::found;
        r.map = std::vector<int>{};
        return r;
    }

    int host_max = 0, pat_max = 0;
    for (int v = 0; v < n; ++v) {
        host_max = std::max(host_max, host.out_degree(v) + host.in_degree(v));
        pat_max = std::max(pat_max, pattern.out_degree(v) + pattern.in_degree(v));
    }
    if (pat_max > host_max) {
        r.status = SolveStatus::absent;
        return r;
    }

    // most-constrained-first: high-degree pattern vertices early, each next
    // vertex adjacent to an earlier one when possible
    std::vector<int> order;
    {
        std::vector<int8_t> placed(n, 0);
        auto deg = [&](int v) { return pattern.out_degree(v) + pattern.in_degree(v); };
        for (int step = 0; step < n; ++step) {
            int best = -1;
            bool best_adj = false;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                bool adj = false;
                for (int u : order) {
                    if (pattern.has_arc(u, v) || pattern.has_arc(v, u)) {
                        adj = true;
                        break;
                    }
                }
                if (best < 0 || (adj && !best_adj) ||
                    (adj == best_adj && deg(v) > deg(best))) {
                    best = v;
                    best_adj = adj;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    std::vector<int> map(n, -1);
    std::vector<int8_t> host_used(n, 0);
    bool over = false;

    std::function<bool(int)> place = [&](int step) -> bool {
        if (r.nodes >= cfg.node_limit) {
            over = true;
            return false;
        }
        ++r.nodes;
        if (step == n) return true;
        int p = order[step];
        for (int v = 0; v < n; ++v) {
            if (host_used[v]) continue;
            if (host.out_degree(v) < pattern.out_degree(p) ||
                host.in_degree(v) < pattern.in_degree(p))
                continue;
            bool ok = true;
            for (int q = 0; q < n && ok; ++q) {
                if (map[q] < 0) continue;
                if (pattern.has_arc(p, q) && !host.has_arc(v, map[q])) ok = false;
                if (pattern.has_arc(q, p) && !host.has_arc(map[q], v)) ok = false;
            }
            if (!ok) continue;
            map[p] = v;
            host_used[v] = 1;
            if (place(step + 1)) return true;
            map[p] = -1;
            host_used[v] = 0;
            if (over) return false;
        }
        return false;
    };

    if (place(0)) {
        r.status = SolveStatus::found;
        r.map = std::move(map);
    } else {
        r.status = over ? SolveStatus::budget_exceeded : SolveStatus::absent;
    }
    return r;
}

} // namespace adhc
