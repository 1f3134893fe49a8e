#include "adhc/absorbing.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace adhc {

bool absorber_valid(const Digraph& d, const AbsorberTuple& t) {
    auto [a, b, c, dd] = t.abcd;
    auto [x, y] = t.target;
    std::vector<int> all{a, b, c, dd, x, y};
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (int v : all)
        if (v < 0 || v >= d.order()) return false;
    return d.has_arc(a, b) && d.has_arc(c, b) && d.has_arc(c, dd) && d.has_arc(a, x) &&
           d.has_arc(c, x) && d.has_arc(y, b) && d.has_arc(y, dd);
}

bool connector_valid(const Digraph& d, const ConnectorPair& c) {
    auto [a, b] = c.ab;
    auto [x, y] = c.target;
    std::vector<int> all{a, b, x, y};
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (int v : all)
        if (v < 0 || v >= d.order()) return false;
    return d.has_arc(a, x) && d.has_arc(a, b) && d.has_arc(y, b);
}

std::vector<AbsorberTuple> enumerate_absorbers(const Digraph& d, int x, int y, size_t limit) {
    if (x == y) throw std::invalid_argument("absorber target vertices must differ");
    std::vector<AbsorberTuple> out;
    VertexSet excl = VertexSet::of(d.order(), {x, y});
    auto in_x = d.in_set(x);   // hosts a and c
    auto out_y = d.out_set(y); // hosts b and d
    in_x -= excl;
    out_y -= excl;
    in_x.for_each([&](int a) {
        if (out.size() >= limit) return;
        // b needs arcs from a, c and y
        VertexSet bs = d.out_set(a) & out_y;
        in_x.for_each([&](int c) {
            if (c == a || out.size() >= limit) return;
            VertexSet bs2 = bs & d.out_set(c);
            VertexSet ds = d.out_set(c) & out_y;
            bs2.for_each([&](int b) {
                if (out.size() >= limit) return;
                ds.for_each([&](int dd) {
                    if (dd == b || dd == a || out.size() >= limit) return;
                    out.push_back({{a, b, c, dd}, {x, y}});
                });
            });
        });
    });
    return out;
}

std::vector<ConnectorPair> enumerate_connectors(const Digraph& d, int x, int y, size_t limit) {
    if (x == y) throw std::invalid_argument("connector target vertices must differ");
    std::vector<ConnectorPair> out;
    VertexSet excl = VertexSet::of(d.order(), {x, y});
    auto in_x = d.in_set(x);
    auto out_y = d.out_set(y);
    in_x -= excl;
    out_y -= excl;
    in_x.for_each([&](int a) {
        if (out.size() >= limit) return;
        VertexSet bs = d.out_set(a) & out_y;
        bs.for_each([&](int b) {
            if (b == a || out.size() >= limit) return;
            out.push_back({{a, b}, {x, y}});
        });
    });
    return out;
}

namespace {

// First absorber tuple for (x,y) whose vertices avoid the given set.
std::optional<AbsorberTuple> find_absorber_avoiding(const Digraph& d, int x, int y,
                                                    const VertexSet& avoid) {
    VertexSet excl = avoid | VertexSet::of(d.order(), {x, y});
    VertexSet in_x = d.in_set(x) - excl;
    VertexSet out_y = d.out_set(y) - excl;
    std::optional<AbsorberTuple> found;
    in_x.for_each([&](int a) {
        if (found) return;
        VertexSet bs = d.out_set(a) & out_y;
        in_x.for_each([&](int c) {
            if (found || c == a) return;
            VertexSet bs2 = bs & d.out_set(c);
            VertexSet ds = d.out_set(c) & out_y;
            bs2.for_each([&](int b) {
                if (found) return;
                ds.for_each([&](int dd) {
                    if (found || dd == b || dd == a) return;
                    found = AbsorberTuple{{a, b, c, dd}, {x, y}};
                });
            });
        });
    });
    return found;
}

} // namespace

FamilySelection select_disjoint_family(int n,
                                       const std::vector<std::vector<std::vector<int>>>& candidates,
                                       double b, double c, uint64_t seed) {
    FamilySelection sel;
    sel.hits.assign(candidates.size(), 0);

    size_t arity = 0;
    for (const auto& list : candidates)
        for (const auto& t : list) {
            if (arity == 0) arity = t.size();
            else if (t.size() != arity) throw std::invalid_argument("mixed tuple arity");
        }
    if (arity == 0) {
        for (size_t i = 0; i < candidates.size(); ++i) sel.shortfall_targets.push_back(i);
        return sel;
    }

    // deduplicated universe in first-seen order
    std::map<std::vector<int>, size_t> index_of;
    std::vector<std::vector<int>> universe;
    for (const auto& list : candidates)
        for (const auto& t : list)
            if (index_of.emplace(t, universe.size()).second) universe.push_back(t);

    const double cap = b * n / (double)arity;
    const double p = std::min(1.0, cap / (double)universe.size());
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);

    std::vector<char> kept(universe.size(), 0);
    std::vector<char> image_used(n, 0);
    size_t kept_count = 0;
    for (size_t i = 0; i < universe.size(); ++i) {
        if (!coin(rng)) continue;
        if ((double)kept_count + 1 > cap) break;
        bool overlap = false;
        for (int v : universe[i])
            if (image_used[v]) {
                overlap = true;
                break;
            }
        if (overlap) continue; // first kept tuple wins
        kept[i] = 1;
        ++kept_count;
        for (int v : universe[i]) image_used[v] = 1;
        sel.family.push_back(universe[i]);
    }

    for (size_t t = 0; t < candidates.size(); ++t) {
        for (const auto& tup : candidates[t]) {
            auto it = index_of.find(tup);
            if (it != index_of.end() && kept[it->second]) ++sel.hits[t];
        }
        if ((double)sel.hits[t] < c * n) sel.shortfall_targets.push_back(t);
    }
    return sel;
}

AbsorbingPath build_absorbing_path(const Digraph& d, int num_absorbers, uint64_t seed) {
    AbsorbingPath result;
    result.path.kind = OrientedWalk::Kind::path;
    if (num_absorbers == 0) return result;
    if (num_absorbers < 0) throw std::invalid_argument("absorber count must be non-negative");
    const int n = d.order();

    // greedy round-robin over ordered pairs: one disjoint absorber per pair
    // until the budget is met, so the registry covers varied targets
    std::vector<std::pair<int, int>> pair_order;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) pair_order.emplace_back(x, y);
    std::mt19937_64 rng(seed);
    std::shuffle(pair_order.begin(), pair_order.end(), rng);

    std::vector<std::array<int, 4>> quads;
    VertexSet used(n);
    for (int round = 0; round < 2 && (int)quads.size() < num_absorbers; ++round) {
        for (auto [x, y] : pair_order) {
            if ((int)quads.size() >= num_absorbers) break;
            if (used.contains(x) || used.contains(y)) continue;
            if (auto t = find_absorber_avoiding(d, x, y, used)) {
                quads.push_back(t->abcd);
                for (int v : t->abcd) used.insert(v);
            }
        }
    }
    if ((int)quads.size() < num_absorbers) {
        std::ostringstream msg;
        msg << "absorber supply exhausted: wanted " << num_absorbers << ", found "
            << quads.size() << " disjoint tuples";
        throw SupplyError(msg.str());
    }

    std::vector<int> seq;
    for (int i = 0; i < num_absorbers; ++i) {
        if (i > 0) {
            // connector (x,y) for the pair (d_{i-1}, a_i)
            int from = quads[i - 1][3], to = quads[i][0];
            auto conns = enumerate_connectors(d, from, to);
            const ConnectorPair* pick = nullptr;
            for (const auto& cp : conns) {
                if (!used.contains(cp.ab.first) && !used.contains(cp.ab.second)) {
                    pick = &cp;
                    break;
                }
            }
            if (!pick) {
                std::ostringstream msg;
                msg << "connector supply exhausted between absorber " << i - 1 << " and " << i;
                throw SupplyError(msg.str());
            }
            used.insert(pick->ab.first);
            used.insert(pick->ab.second);
            seq.push_back(pick->ab.first);
            seq.push_back(pick->ab.second);
        }
        for (int v : quads[i]) seq.push_back(v);
    }

    result.path = OrientedWalk::proper_path(std::move(seq));
    WalkRequire req;
    req.anti_directed = true;
    req.proper = true;
    if (!verify_walk(d, result.path, req))
        throw std::logic_error("absorbing path failed verification");
    for (auto& q : quads) result.registry.push_back({q, {-1, -1}});
    return result;
}

OrientedWalk absorb(const Digraph& d, const OrientedWalk& path,
                    std::vector<AbsorberTuple>& registry, const VertexSet& w) {
    if (w.count() % 2 != 0) throw std::invalid_argument("absorbed set must have even order");
    for (int v : path.verts)
        if (w.contains(v)) throw std::invalid_argument("absorbed set must avoid the path");

    int free_count = 0;
    for (const auto& t : registry)
        if (t.target.first < 0) ++free_count;
    if (w.count() / 2 > free_count) throw std::invalid_argument("absorber capacity exceeded");

    auto pairs = w.to_vector();
    std::vector<int> seq = path.verts;
    for (size_t i = 0; i + 1 < pairs.size(); i += 2) {
        int p = pairs[i], q = pairs[i + 1];
        bool placed = false;
        for (auto& t : registry) {
            if (t.target.first >= 0) continue;
            for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
                AbsorberTuple probe = t;
                probe.target = {x, y};
                if (!absorber_valid(d, probe)) continue;
                auto [a, bb, c, dd] = t.abcd;
                auto it = std::find(seq.begin(), seq.end(), a);
                if (it == seq.end() || std::distance(it, seq.end()) < 4)
                    throw std::logic_error("registry tuple is not on the path");
                // abcd -> axcbyd
                std::vector<int> repl{a, x, c, bb, y, dd};
                it = seq.erase(it, it + 4);
                seq.insert(it, repl.begin(), repl.end());
                t.target = {x, y};
                placed = true;
                break;
            }
            if (placed) break;
        }
        if (!placed) {
            std::ostringstream msg;
            msg << "no free absorber accepts the pair {" << p << "," << q << "}";
            throw std::invalid_argument(msg.str());
        }
    }

    OrientedWalk out = OrientedWalk::proper_path(std::move(seq));
    WalkRequire req;
    req.anti_directed = true;
    req.proper = true;
    if (!verify_walk(d, out, req)) throw std::logic_error("absorb result failed verification");
    if (!path.verts.empty() &&
        (out.verts.front() != path.verts.front() || out.verts.back() != path.verts.back()))
        throw std::logic_error("absorb moved the path endpoints");
    return out;
}

} // namespace adhc
