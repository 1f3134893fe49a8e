#include "adhc/pipeline.hpp"

#include "adhc/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace adhc {

const char* to_string(PipelineReport::Outcome o) {
    switch (o) {
        case PipelineReport::Outcome::adhc: return "adhc";
        case PipelineReport::Outcome::exception_f1: return "exception-f1";
        case PipelineReport::Outcome::exception_f2: return "exception-f2";
        case PipelineReport::Outcome::absent_proven: return "absent-proven";
        case PipelineReport::Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(PipelineReport::Route r) {
    switch (r) {
        case PipelineReport::Route::none: return "none";
        case PipelineReport::Route::exact: return "exact";
        case PipelineReport::Route::random_split: return "random-split";
        case PipelineReport::Route::extremal: return "extremal";
    }
    return "?";
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct TargetPlan {
    SplitTargets targets;
    std::vector<std::pair<int, SplitCell>> preassigned;
    double imbalance = 0.0;
};

// Preassignment cell for a vertex that must land on the given bipartite side.
std::optional<SplitCell> cell_for(const FourParts& parts, int v, bool u_side, int i) {
    if (u_side) {
        // U_i = X_{3-i}^i ∪ Y_i^i
        if (i == 1) {
            if (parts.x2.contains(v)) return SplitCell::x2a;
            if (parts.y1.contains(v)) return SplitCell::y1a;
        } else {
            if (parts.x1.contains(v)) return SplitCell::x1b;
            if (parts.y2.contains(v)) return SplitCell::y2b;
        }
    } else {
        // V_i = X_i^i ∪ Y_i^{3-i}
        if (i == 1) {
            if (parts.x1.contains(v)) return SplitCell::x1a;
            if (parts.y1.contains(v)) return SplitCell::y1b;
        } else {
            if (parts.x2.contains(v)) return SplitCell::x2b;
            if (parts.y2.contains(v)) return SplitCell::y2a;
        }
    }
    return std::nullopt;
}

// Enumerate target vectors hitting the required side sizes, nearest-balance
// first.
std::vector<TargetPlan> plan_targets(const FourParts& parts, int tu1, int tv1, int tv2,
                                     double beta_slack,
                                     const std::vector<std::pair<int, SplitCell>>& pre) {
    const int x1s = parts.x1.count(), x2s = parts.x2.count();
    const int y1s = parts.y1.count(), y2s = parts.y2.count();
    std::vector<TargetPlan> plans;

    int pre_cnt[8] = {};
    for (auto [v, c] : pre) ++pre_cnt[(int)c];

    for (int y11 = 0; y11 <= y1s; ++y11) {
        int x21 = tu1 - y11;               // |U_1| = x21 + y11
        int x11 = tv1 - (y1s - y11);       // |V_1| = x11 + (y1s - y11)
        if (x21 < 0 || x21 > x2s || x11 < 0 || x11 > x1s) continue;
        int y21 = tv2 - (x2s - x21);       // |V_2| = (x2s - x21) + y21
        if (y21 < 0 || y21 > y2s) continue;

        TargetPlan p;
        p.targets.x[0][0] = x11;
        p.targets.x[0][1] = x1s - x11;
        p.targets.x[1][0] = x21;
        p.targets.x[1][1] = x2s - x21;
        p.targets.y[0][0] = y11;
        p.targets.y[0][1] = y1s - y11;
        p.targets.y[1][0] = y21;
        p.targets.y[1][1] = y2s - y21;
        p.preassigned = pre;

        bool ok = true;
        double imb = 0.0;
        auto check = [&](int val, int part, int pre_need) {
            double dev = std::abs(val - part / 2.0);
            if (dev > beta_slack + 1e-9 || val < pre_need) ok = false;
            imb += dev;
        };
        check(x11, x1s, pre_cnt[(int)SplitCell::x1a]);
        check(x1s - x11, x1s, pre_cnt[(int)SplitCell::x1b]);
        check(x21, x2s, pre_cnt[(int)SplitCell::x2a]);
        check(x2s - x21, x2s, pre_cnt[(int)SplitCell::x2b]);
        check(y11, y1s, pre_cnt[(int)SplitCell::y1a]);
        check(y1s - y11, y1s, pre_cnt[(int)SplitCell::y1b]);
        check(y21, y2s, pre_cnt[(int)SplitCell::y2a]);
        check(y2s - y21, y2s, pre_cnt[(int)SplitCell::y2b]);
        if (!ok) continue;
        p.imbalance = imb;
        plans.push_back(std::move(p));
    }
    std::stable_sort(plans.begin(), plans.end(),
                     [](const TargetPlan& a, const TargetPlan& b) { return a.imbalance < b.imbalance; });
    return plans;
}

struct EdgeAssignment {
    std::pair<int, int> e1, e2; // e1 closes the cycle, e2 joins the two paths
    int tu1, tv1, tu2, tv2;
    std::vector<std::pair<int, SplitCell>> pre;
};

// All ways to realise a disjoint pair of connecting edges as the two special
// edges of the reduction, with the side sizes each case requires.
std::vector<EdgeAssignment> edge_assignments(const FourParts& parts, std::pair<int, int> e1,
                                             std::pair<int, int> e2, int n2) {
    std::vector<EdgeAssignment> out;
    // balanced case needs order divisible by four
    if (n2 % 4 == 0) {
        int q = n2 / 4;
        for (auto [ea, eb] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
            auto cu = cell_for(parts, ea.first, true, 1);
            auto cv = cell_for(parts, ea.second, false, 2);
            auto cup = cell_for(parts, eb.first, true, 2);
            auto cvp = cell_for(parts, eb.second, false, 1);
            if (cu && cv && cup && cvp) {
                EdgeAssignment a{ea, eb, q, q, q, q, {}};
                a.pre = {{ea.first, *cu}, {ea.second, *cv}, {eb.first, *cup}, {eb.second, *cvp}};
                out.push_back(std::move(a));
            }
        }
    }
    // offset case: both edges U_i -> V_{3-i}, |U_i| = |V_i|+1, |V_{3-i}| = |U_{3-i}|+1
    for (int i = 1; i <= 2; ++i) {
        auto cu = cell_for(parts, e1.first, true, i);
        auto cv = cell_for(parts, e1.second, false, 3 - i);
        auto cup = cell_for(parts, e2.first, true, i);
        auto cvp = cell_for(parts, e2.second, false, 3 - i);
        if (!(cu && cv && cup && cvp)) continue;
        // |U_i| = s+1, |V_i| = s, |V_{3-i}| = t+1, |U_{3-i}| = t
        for (int s = 0; 2 * s + 2 <= n2; ++s) {
            int rest = n2 - (2 * s + 1); // |U_{3-i}| + |V_{3-i}| = 2t + 1
            if (rest < 1 || rest % 2 == 0) continue;
            int t = (rest - 1) / 2;
            EdgeAssignment a;
            a.e1 = e1;
            a.e2 = e2;
            if (i == 1) {
                a.tu1 = s + 1;
                a.tv1 = s;
                a.tu2 = t;
                a.tv2 = t + 1;
            } else {
                a.tu2 = s + 1;
                a.tv2 = s;
                a.tu1 = t;
                a.tv1 = t + 1;
            }
            a.pre = {{e1.first, *cu}, {e1.second, *cv}, {e2.first, *cup}, {e2.second, *cvp}};
            out.push_back(std::move(a));
        }
    }
    return out;
}

std::optional<OrientedWalk> try_extremal_route(const Digraph& d, const FourParts& parts,
                                               const PipelineConfig& cfg, uint64_t seed,
                                               std::string* note) {
    // all disjoint connecting-edge pairs, capped
    std::vector<std::pair<int, int>> conn;
    for (int u = 0; u < d.order(); ++u)
        d.for_each_out(u, [&](int v) {
            if (is_connecting_edge(parts, u, v)) conn.emplace_back(u, v);
        });
    if (conn.size() < 2) {
        *note = "fewer than two connecting edges";
        return std::nullopt;
    }

    const double n = d.order() / 2.0;
    int pair_budget = 24;
    int split_budget = 8 * cfg.split_target_attempts; // splitting runs across all pairs
    for (size_t i = 0; i < conn.size() && pair_budget > 0 && split_budget > 0; ++i) {
        for (size_t j = i + 1; j < conn.size() && pair_budget > 0 && split_budget > 0; ++j) {
            auto [a, b] = conn[i];
            auto [c, e] = conn[j];
            if (a == c || a == e || b == c || b == e) continue;
            --pair_budget;
            for (const auto& asg : edge_assignments(parts, conn[i], conn[j], d.order())) {
                if (split_budget <= 0) break;
                auto plans = plan_targets(parts, asg.tu1, asg.tv1, asg.tv2,
                                          cfg.params.beta * n, asg.pre);
                int attempts = std::min<int>((int)plans.size(), cfg.split_target_attempts);
                for (int pi = 0; pi < attempts && split_budget > 0; ++pi) {
                    --split_budget;
                    std::optional<Splitting> split;
                    try {
                        split = good_splitting(d, parts, plans[pi].preassigned,
                                               plans[pi].targets, cfg.params,
                                               splitmix64(seed + pi), cfg.split_retries);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    if (!split) continue;
                    try {
                        auto walk = reduce_to_adhc(d, *split, asg.e1, asg.e2, cfg.solver,
                                                   splitmix64(seed ^ 0x5bd1e995u) + pi);
                        if (walk) return walk;
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                }
            }
        }
    }
    *note = "extremal route exhausted its split attempts";
    return std::nullopt;
}

} // namespace

PipelineReport heuristic_adhc(const Digraph& d, const PipelineConfig& cfg, uint64_t seed) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    PipelineReport rep;
    auto finish = [&](PipelineReport r) {
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(clock::now() - t0)
                .count();
        return r;
    };
    const int n2 = d.order();

    if (n2 % 2 != 0) {
        rep.outcome = PipelineReport::Outcome::absent_proven;
        rep.route = PipelineReport::Route::exact;
        rep.note = "odd order admits no anti-directed cycle";
        return finish(rep);
    }

    // small orders go straight to the exact solver, which is definitive
    if (n2 <= cfg.solver.exact_cutoff) {
        auto res = solve_adhc(d, cfg.solver);
        rep.nodes += res.nodes;
        if (res.status == SolveStatus::found) {
            rep.outcome = PipelineReport::Outcome::adhc;
            rep.route = PipelineReport::Route::exact;
            rep.cert = std::move(res.walk);
            return finish(rep);
        }
        if (res.status == SolveStatus::absent) {
            rep.outcome = PipelineReport::Outcome::absent_proven;
            rep.route = PipelineReport::Route::exact;
            return finish(rep);
        }
        rep.note = "exact budget exceeded; ";
    }

    // route 1: random balanced bipartitions
    std::mt19937_64 rng(splitmix64(seed));
    std::vector<int> perm(n2);
    std::iota(perm.begin(), perm.end(), 0);
    SolverConfig r1cfg = cfg.solver;
    r1cfg.node_limit = cfg.route1_node_budget;
    for (int r = 0; r < cfg.route1_retries; ++r) {
        std::shuffle(perm.begin(), perm.end(), rng);
        VertexSet s(n2), t(n2);
        for (int i = 0; i < n2 / 2; ++i) s.insert(perm[i]);
        for (int i = n2 / 2; i < n2; ++i) t.insert(perm[i]);
        auto g = bipartite_view(d, s, t);
        auto res = bip_ham_cycle(g, r1cfg, splitmix64(seed + r + 1));
        rep.nodes += res.nodes;
        rep.retries_used = r + 1;
        if (res.status == SolveStatus::found) {
            OrientedWalk w = OrientedWalk::alternating_cycle(*res.sequence);
            WalkRequire req;
            req.anti_directed = true;
            req.spanning = true;
            if (!verify_walk(d, w, req))
                throw std::logic_error("route-1 certificate failed verification");
            rep.outcome = PipelineReport::Outcome::adhc;
            rep.route = PipelineReport::Route::random_split;
            rep.cert = std::move(w);
            return finish(rep);
        }
    }

    // route 2: extremal structure.  The recognizer runs first: it is exact,
    // cheap, and the two exceptions are extremal by construction.
    auto rec = recognize_exception(d);
    if (rec.kind != ExceptionKind::none) {
        rep.outcome = rec.kind == ExceptionKind::f1 ? PipelineReport::Outcome::exception_f1
                                                    : PipelineReport::Outcome::exception_f2;
        rep.route = PipelineReport::Route::extremal;
        return finish(rep);
    }

    auto ws = extremal_witness(d, cfg.params.alpha, WitnessMode::local_search, splitmix64(seed ^ 7));
    if (!ws.witness) {
        rep.note += "no extremal witness found";
        return finish(rep);
    }
    try {
        auto p5 = preprocess(d, *ws.witness, cfg.params.alpha);
        auto parts = distribute_Z(d, p5, cfg.params.gamma);
        std::string note;
        auto walk = try_extremal_route(d, parts, cfg, seed, &note);
        if (walk) {
            rep.outcome = PipelineReport::Outcome::adhc;
            rep.route = PipelineReport::Route::extremal;
            rep.cert = std::move(walk);
            return finish(rep);
        }
        rep.note += note;
    } catch (const UnclassifiedVertex& e) {
        rep.note += e.what();
    }
    return finish(rep);
}

std::vector<Digraph> counterexample_search(int size, int trials, int degree_floor,
                                           uint64_t seed, const CounterexampleConfig& cfg) {
    if (size % 2 != 0) throw std::invalid_argument("size must be even");
    std::vector<std::optional<Digraph>> found(trials);
    std::atomic<int> next{0};
    int jobs = std::max(1, cfg.jobs);

    auto worker = [&]() {
        while (true) {
            int t = next.fetch_add(1);
            if (t >= trials) break;
            Digraph d = gen_random_min_semidegree(size, degree_floor, splitmix64(seed + t));
            auto res = solve_adhc(d, cfg.solver);
            if (res.status == SolveStatus::absent &&
                recognize_exception(d).kind == ExceptionKind::none)
                found[t] = std::move(d);
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<Digraph> out;
    for (auto& f : found)
        if (f) out.push_back(std::move(*f));
    return out;
}

} // namespace adhc
