#include "adhc/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace adhc {

VertexSet Splitting::u_side(int i) const {
    // U_i = X_{3-i}^i ∪ Y_i^i
    return i == 1 ? (x[1][0] | y[0][0]) : (x[0][1] | y[1][1]);
}

VertexSet Splitting::v_side(int i) const {
    // V_i = X_i^i ∪ Y_i^{3-i}
    return i == 1 ? (x[0][0] | y[0][1]) : (x[1][1] | y[1][0]);
}

namespace {

const VertexSet& part_of_cell(const FourParts& parts, SplitCell c) {
    switch (c) {
        case SplitCell::x1a:
        case SplitCell::x1b: return parts.x1;
        case SplitCell::x2a:
        case SplitCell::x2b: return parts.x2;
        case SplitCell::y1a:
        case SplitCell::y1b: return parts.y1;
        default: return parts.y2;
    }
}

struct CellRef {
    bool is_x;
    int i, j;
};

CellRef cell_ref(SplitCell c) {
    switch (c) {
        case SplitCell::x1a: return {true, 0, 0};
        case SplitCell::x1b: return {true, 0, 1};
        case SplitCell::x2a: return {true, 1, 0};
        case SplitCell::x2b: return {true, 1, 1};
        case SplitCell::y1a: return {false, 0, 0};
        case SplitCell::y1b: return {false, 0, 1};
        case SplitCell::y2a: return {false, 1, 0};
        default: return {false, 1, 1};
    }
}

} // namespace

std::optional<Splitting> good_splitting(const Digraph& d, const FourParts& parts,
                                        const std::vector<std::pair<int, SplitCell>>& preassigned,
                                        const SplitTargets& targets, const Params& params,
                                        uint64_t seed, int max_retries) {
    const int n2 = d.order();
    const double n = n2 / 2.0;
    const double beta_slack = params.beta * n;

    const VertexSet* part_sets[2][2] = {{&parts.x1, &parts.x2}, {&parts.y1, &parts.y2}};

    // target validation: sums match, near-balanced halves
    for (int i = 0; i < 2; ++i) {
        int xs = part_sets[0][i]->count(), ys = part_sets[1][i]->count();
        if (targets.x[i][0] + targets.x[i][1] != xs || targets.x[i][0] < 0 || targets.x[i][1] < 0)
            throw std::invalid_argument("x targets do not partition the part");
        if (targets.y[i][0] + targets.y[i][1] != ys || targets.y[i][0] < 0 || targets.y[i][1] < 0)
            throw std::invalid_argument("y targets do not partition the part");
        for (int j = 0; j < 2; ++j) {
            if (std::abs(targets.x[i][j] - xs / 2.0) > beta_slack + 1e-9)
                throw std::invalid_argument("x target outside the near-balance window");
            if (std::abs(targets.y[i][j] - ys / 2.0) > beta_slack + 1e-9)
                throw std::invalid_argument("y target outside the near-balance window");
        }
    }

    // preassignment validation
    int pre_count[2][2][2] = {};
    std::vector<std::pair<int, CellRef>> pre;
    {
        std::vector<int> seen(n2, -1);
        for (auto [v, cell] : preassigned) {
            if (!part_of_cell(parts, cell).contains(v))
                throw std::invalid_argument("preassigned vertex is not in the named part");
            CellRef r = cell_ref(cell);
            int code = (r.is_x ? 0 : 4) + r.i * 2 + r.j;
            if (seen[v] >= 0 && seen[v] != code)
                throw std::invalid_argument("vertex preassigned to two different halves");
            if (seen[v] == code) continue;
            seen[v] = code;
            ++pre_count[r.is_x ? 0 : 1][r.i][r.j];
            pre.push_back({v, r});
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (pre_count[0][i][j] > targets.x[i][j] || pre_count[1][i][j] > targets.y[i][j])
                    throw std::invalid_argument("targets too small for the preassigned vertices");
            }
    }

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Splitting s;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                s.x[i][j] = VertexSet(n2);
                s.y[i][j] = VertexSet(n2);
            }
        for (auto [v, r] : pre) (r.is_x ? s.x : s.y)[r.i][r.j].insert(v);

        for (int isx = 0; isx < 2; ++isx)
            for (int i = 0; i < 2; ++i) {
                auto& half_a = (isx == 0 ? s.x : s.y)[i][0];
                auto& half_b = (isx == 0 ? s.x : s.y)[i][1];
                int want_a = (isx == 0 ? targets.x : targets.y)[i][0] - half_a.count();
                std::vector<int> free;
                part_sets[isx][i]->for_each([&](int v) {
                    if (!half_a.contains(v) && !half_b.contains(v)) free.push_back(v);
                });
                std::shuffle(free.begin(), free.end(), rng);
                for (int v : free) {
                    if (want_a > 0) {
                        half_a.insert(v);
                        --want_a;
                    } else {
                        half_b.insert(v);
                    }
                }
            }

        // goodness: δ(G_i) >= γn within the split sides, |Q_i| <= βn against
        // the whole bipartite graph
        VertexSet u_all = s.u_side(1) | s.u_side(2);
        VertexSet v_all = s.v_side(1) | s.v_side(2);
        bool good = true;
        for (int i = 1; i <= 2 && good; ++i) {
            VertexSet ui = s.u_side(i), vi = s.v_side(i);
            int dmin = -1, q = 0;
            ui.for_each([&](int u) {
                int dg = d.out_degree_in(u, vi);
                if (dmin < 0 || dg < dmin) dmin = dg;
                if ((double)d.out_degree_in(u, v_all) < (1.0 - params.gamma) * n / 2.0) ++q;
            });
            vi.for_each([&](int v) {
                int dg = d.in_degree_in(v, ui);
                if (dmin < 0 || dg < dmin) dmin = dg;
                if ((double)d.in_degree_in(v, u_all) < (1.0 - params.gamma) * n / 2.0) ++q;
            });
            s.min_deg[i - 1] = std::max(dmin, 0);
            s.q_size[i - 1] = q;
            if (dmin < params.gamma * n - 1e-9 || q > params.beta * n + 1e-9) good = false;
        }
        if (good) return s;
    }
    return std::nullopt;
}

bool is_connecting_edge(const FourParts& parts, int u, int v) {
    if (parts.x1.contains(u)) return parts.x1.contains(v) || parts.y1.contains(v);
    if (parts.x2.contains(u)) return parts.x2.contains(v) || parts.y2.contains(v);
    if (parts.y1.contains(u)) return parts.y2.contains(v) || parts.x2.contains(v);
    if (parts.y2.contains(u)) return parts.y1.contains(v) || parts.x1.contains(v);
    return false;
}

namespace {

// admissible W-sides for a vertex: Y vertices are pinned, X vertices float
std::pair<bool, bool> w_sides(const FourParts& parts, int v) {
    if (parts.y1.contains(v)) return {true, false};
    if (parts.y2.contains(v)) return {false, true};
    return {true, true};
}

bool can_direct(const FourParts& parts, std::pair<int, int> e, int from_side) {
    auto [u1, u2] = w_sides(parts, e.first);
    auto [v1, v2] = w_sides(parts, e.second);
    bool tail_ok = from_side == 1 ? u1 : u2;
    bool head_ok = from_side == 1 ? v2 : v1;
    return tail_ok && head_ok;
}

} // namespace

std::optional<ConnectingEdges> find_connecting_edges(const Digraph& d, const FourParts& parts) {
    std::vector<std::pair<int, int>> conn;
    for (int u = 0; u < d.order(); ++u)
        d.for_each_out(u, [&](int v) {
            if (is_connecting_edge(parts, u, v)) conn.emplace_back(u, v);
        });
    for (size_t i = 0; i < conn.size(); ++i)
        for (size_t j = i + 1; j < conn.size(); ++j) {
            auto [a, b] = conn[i];
            auto [c, e] = conn[j];
            if (a == c || a == e || b == c || b == e) continue;
            ConnectingEdges r{conn[i], conn[j], EdgePairShape::opposite};
            if ((can_direct(parts, r.e1, 1) && can_direct(parts, r.e2, 2)) ||
                (can_direct(parts, r.e1, 2) && can_direct(parts, r.e2, 1)))
                r.shape = EdgePairShape::opposite;
            else if (can_direct(parts, r.e1, 1) && can_direct(parts, r.e2, 1))
                r.shape = EdgePairShape::one_sided_1;
            else
                r.shape = EdgePairShape::one_sided_2;
            return r;
        }
    return std::nullopt;
}

std::optional<OrientedWalk> reduce_to_adhc(const Digraph& d, const Splitting& s,
                                           std::pair<int, int> e1, std::pair<int, int> e2,
                                           const SolverConfig& cfg, uint64_t seed) {
    VertexSet u1 = s.u_side(1), v1 = s.v_side(1), u2 = s.u_side(2), v2 = s.v_side(2);
    const int su1 = u1.count(), sv1 = v1.count(), su2 = u2.count(), sv2 = v2.count();

    auto assemble = [&](std::vector<int> first, const std::vector<int>& second)
        -> std::optional<OrientedWalk> {
        first.insert(first.end(), second.begin(), second.end());
        OrientedWalk w = OrientedWalk::alternating_cycle(std::move(first));
        WalkRequire req;
        req.anti_directed = true;
        req.spanning = true;
        if (!verify_walk(d, w, req)) return std::nullopt;
        return w;
    };

    // balanced case: cycle = u ..P1.. v' , u' ..P2.. v with arcs u'->v', u->v
    if (su1 == sv1 && su2 == sv2 && su1 == sv2) {
        for (auto [ea, eb] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
            auto [u, v] = ea;
            auto [up, vp] = eb;
            if (!(u1.contains(u) && v2.contains(v) && u2.contains(up) && v1.contains(vp)))
                continue;
            auto g1 = bipartite_view(d, u1, v1);
            auto p1 = bip_ham_path(g1, u, vp, cfg, seed);
            if (p1.status != SolveStatus::found) return std::nullopt;
            auto g2 = bipartite_view(d, u2, v2);
            auto p2 = bip_ham_path(g2, up, v, cfg, seed + 1);
            if (p2.status != SolveStatus::found) return std::nullopt;
            return assemble(*p1.sequence, *p2.sequence);
        }
        throw std::invalid_argument("edges do not span the four sides as required");
    }

    // offset case: both edges from U_i into V_{3-i}
    for (int i = 1; i <= 2; ++i) {
        const VertexSet& ui = i == 1 ? u1 : u2;
        const VertexSet& vi = i == 1 ? v1 : v2;
        const VertexSet& uo = i == 1 ? u2 : u1;
        const VertexSet& vo = i == 1 ? v2 : v1;
        if (ui.count() != vi.count() + 1 || vo.count() != uo.count() + 1) continue;
        auto [u, v] = e1;
        auto [up, vp] = e2;
        if (!(ui.contains(u) && ui.contains(up) && vo.contains(v) && vo.contains(vp)))
            continue;
        auto gi = bipartite_view(d, ui, vi);
        auto pi = bip_ham_path(gi, u, up, cfg, seed);
        if (pi.status != SolveStatus::found) return std::nullopt;
        auto go = bipartite_view(d, uo, vo);
        auto po = bip_ham_path(go, vp, v, cfg, seed + 1);
        if (po.status != SolveStatus::found) return std::nullopt;
        return assemble(*pi.sequence, *po.sequence);
    }
    throw std::invalid_argument("splitting sizes violate the reduction hypotheses");
}

} // namespace adhc
