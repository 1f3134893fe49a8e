#include "doctest.h"

#include "adhc/absorbing.hpp"
#include "adhc/extremal.hpp"
#include "adhc/families.hpp"
#include "adhc/maxcut.hpp"
#include "adhc/stars.hpp"

#include <random>
#include <set>

using namespace adhc;

namespace {

Digraph random_digraph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) d.add_arc(u, v);
    return d;
}

} // namespace

TEST_CASE("maxcut keeps everything when the pair is already one-way complete") {
    Digraph d(8);
    VertexSet x = VertexSet::of(8, {0, 1, 2, 3});
    VertexSet y = VertexSet::of(8, {4, 5, 6, 7});
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) d.add_arc(u, v);
    auto r = maxcut_partition(d, x, y, 1.0);
    CHECK(r.x == x);
    CHECK(r.y == y);
}

TEST_CASE("maxcut degree floors hold on overlapping sides") {
    auto k8 = gen_complete(8);
    VertexSet all = VertexSet::all(8);
    auto r = maxcut_partition(k8, all, all, 0.5);
    CHECK_FALSE(r.x.empty());
    CHECK_FALSE(r.y.empty());
    CHECK_FALSE(r.x.intersects(r.y));
    r.x.for_each([&](int v) { CHECK(k8.out_degree_in(v, r.y) >= 0.5 / 8 * 8); });
    r.y.for_each([&](int v) { CHECK(k8.in_degree_in(v, r.x) >= 0.5 / 8 * 8); });
}

TEST_CASE("maxcut rejects a violated density precondition") {
    Digraph d(4);
    VertexSet x = VertexSet::of(4, {0, 1});
    VertexSet y = VertexSet::of(4, {2, 3});
    CHECK_THROWS_AS(maxcut_partition(d, x, y, 0.5), std::invalid_argument);
}

TEST_CASE("maxcut floors on random dense instances") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        int n = 8 + (int)(seed % 5);
        auto d = random_digraph(n, 0.6, 300 + seed);
        VertexSet x(n), y(n);
        std::mt19937_64 rng(seed);
        for (int v = 0; v < n; ++v) {
            if (rng() % 3) x.insert(v);
            if (rng() % 3) y.insert(v);
        }
        double xs = x.count(), ys = y.count();
        if (xs == 0 || ys == 0) continue;
        double c = (double)arc_count(d, x, y) / (xs * ys);
        if (c <= 0) continue;
        auto r = maxcut_partition(d, x, y, c);
        r.x.for_each([&](int v) {
            CHECK((double)d.out_degree_in(v, r.y) >= c / 8 * ys - 1e-9);
        });
        r.y.for_each([&](int v) {
            CHECK((double)d.in_degree_in(v, r.x) >= c / 8 * xs - 1e-9);
        });
    }
}

TEST_CASE("dense pairs yield long proper anti-directed paths") {
    Digraph d(8);
    VertexSet x = VertexSet::of(8, {0, 1, 2, 3});
    VertexSet y = VertexSet::of(8, {4, 5, 6, 7});
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) d.add_arc(u, v);
    auto w = proper_adp_from_dense_pair(d, x, y, 1.0);
    CHECK(w.size() == 8);

    Digraph tiny(2);
    tiny.add_arc(0, 1);
    auto w2 = proper_adp_from_dense_pair(tiny, VertexSet::of(2, {0}), VertexSet::of(2, {1}), 0.5);
    CHECK(w2.size() == 2);

    // bound check across random dense pairs (the engine also self-checks)
    for (uint64_t seed = 0; seed < 100; ++seed) {
        int n = 10 + (int)(seed % 4);
        auto g = random_digraph(n, 0.7, 900 + seed);
        VertexSet xs(n), ys(n);
        for (int v = 0; v < n / 2; ++v) xs.insert(v);
        for (int v = n / 2; v < n; ++v) ys.insert(v);
        double c = (double)arc_count(g, xs, ys) / ((double)xs.count() * ys.count());
        if (c <= 0) continue;
        auto path = proper_adp_from_dense_pair(g, xs, ys, c);
        CHECK((double)path.size() + 1e-9 >= c / 4 * std::min(xs.count(), ys.count()));
    }
}

TEST_CASE("absorber and connector censuses on the complete digraph") {
    auto k8 = gen_complete(8);
    auto abs = enumerate_absorbers(k8, 0, 1);
    CHECK(abs.size() == 360);
    for (const auto& t : abs) CHECK(absorber_valid(k8, t));
    auto con = enumerate_connectors(k8, 0, 1);
    CHECK(con.size() == 30);
    for (const auto& c : con) CHECK(connector_valid(k8, c));

    // a limit caps the enumeration
    CHECK(enumerate_absorbers(k8, 0, 1, 17).size() == 17);
}

TEST_CASE("no in-arcs at the first target kills the census") {
    Digraph d(8);
    for (int u = 1; u < 8; ++u)
        for (int v = 1; v < 8; ++v)
            if (u != v) d.add_arc(u, v);
    for (int v = 1; v < 8; ++v) d.add_arc(0, v); // vertex 0 has in-degree 0
    CHECK(enumerate_absorbers(d, 0, 1).empty());
    CHECK(enumerate_connectors(d, 0, 1).empty());
}

TEST_CASE("absorber census of the first exception") {
    // extremal structure starves exactly the y-pairs: an (y_1,y_2)-absorber
    // would need an arc inside X_2, and the X classes are independent sets
    FLabels l;
    auto f1 = gen_F1(16, &l);
    size_t least_overall = SIZE_MAX;
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) {
            if (x == y) continue;
            least_overall = std::min(least_overall, enumerate_absorbers(f1, x, y).size());
        }
    CHECK(least_overall == 0);
    CHECK(enumerate_absorbers(f1, l.y1_vertex, l.y2_vertex).empty());
    CHECK(enumerate_absorbers(f1, l.y2_vertex, l.y1_vertex).empty());
    // pairs served by the dense cross-class arcs still have plenty
    CHECK(enumerate_absorbers(f1, l.x1.next(0), l.x2.next(0)).size() > 0);
}

TEST_CASE("disjoint family selection") {
    // ordered pairs of a 100-vertex set; each target wants pairs disjoint from it
    const int n = 100;
    std::vector<std::vector<std::vector<int>>> cands;
    std::vector<std::vector<int>> universe;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) universe.push_back({a, b});
    for (int x = 0; x < 24; ++x)
        for (int y = 0; y < 24; ++y) {
            if (x == y) continue;
            std::vector<std::vector<int>> list;
            for (auto& t : universe)
                if (t[0] != x && t[0] != y && t[1] != x && t[1] != y) list.push_back(t);
            cands.push_back(std::move(list));
        }
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto sel = select_disjoint_family(n, cands, 0.2, 0.0, seed);
        std::set<int> seen;
        for (auto& t : sel.family)
            for (int v : t) CHECK(seen.insert(v).second); // images pairwise disjoint
        CHECK(sel.family.size() <= 10);                   // b·n/d
        int64_t least = INT64_MAX;
        for (auto h : sel.hits) least = std::min(least, h);
        CHECK(least >= 1);
    }
}

TEST_CASE("connector reservoir keeps every pair served on complete hosts") {
    const int n = 40;
    auto host = gen_complete(n);
    std::vector<std::vector<std::vector<int>>> cands;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            std::vector<std::vector<int>> list;
            for (const auto& c : enumerate_connectors(host, x, y))
                list.push_back({c.ab.first, c.ab.second});
            cands.push_back(std::move(list));
        }
    for (uint64_t seed = 1; seed <= 3; ++seed) {
        auto sel = select_disjoint_family(n, cands, 0.6, 0.0, seed);
        CHECK(sel.family.size() >= 3);
        int64_t least = INT64_MAX;
        for (auto h : sel.hits) least = std::min(least, h);
        // disjoint images mean a pair can miss at most two family members
        CHECK(least >= (int64_t)sel.family.size() - 2);
        CHECK(least > 0);
    }
}

TEST_CASE("degenerate family selections") {
    // one candidate shared by every target
    std::vector<std::vector<std::vector<int>>> shared(5, {{1, 2}});
    auto sel = select_disjoint_family(10, shared, 2.0, 0.0, 3);
    CHECK(sel.family.size() <= 1);
    if (sel.family.size() == 1)
        for (auto h : sel.hits) CHECK(h == 1);

    // an empty list reports a shortfall at threshold c
    std::vector<std::vector<std::vector<int>>> mixed{{{1, 2}}, {}};
    auto sel2 = select_disjoint_family(10, mixed, 2.0, 0.1, 3);
    CHECK(sel2.hits[1] == 0);
    bool reported = false;
    for (auto t : sel2.shortfall_targets) reported |= t == 1;
    CHECK(reported);
}

TEST_CASE("absorbing path assembly") {
    auto k20 = gen_complete(20);
    auto built = build_absorbing_path(k20, 3, 7);
    CHECK(built.path.size() == 16); // 4l + 2(l-1)
    CHECK(built.registry.size() == 3);

    auto single = build_absorbing_path(k20, 1, 7);
    CHECK(single.path.size() == 4);

    auto none = build_absorbing_path(k20, 0, 7);
    CHECK(none.path.size() == 0);
    CHECK(none.registry.empty());

    // 6 vertices cannot host two disjoint absorbers plus a connector
    CHECK_THROWS_AS(build_absorbing_path(gen_complete(6), 2, 7), SupplyError);
}

TEST_CASE("absorb inserts pairs without moving the endpoints") {
    auto k20 = gen_complete(20);
    auto built = build_absorbing_path(k20, 3, 11);
    VertexSet on_path(20);
    for (int v : built.path.verts) on_path.insert(v);

    // empty W is a no-op
    auto reg0 = built.registry;
    auto same = absorb(k20, built.path, reg0, VertexSet(20));
    CHECK(same.verts == built.path.verts);

    // one pair grows the path by two
    VertexSet w(20);
    int got = 0;
    for (int v = 0; v < 20 && got < 2; ++v)
        if (!on_path.contains(v)) {
            w.insert(v);
            ++got;
        }
    auto reg1 = built.registry;
    auto grown = absorb(k20, built.path, reg1, w);
    CHECK(grown.size() == built.path.size() + 2);
    CHECK(grown.verts.front() == built.path.verts.front());
    CHECK(grown.verts.back() == built.path.verts.back());

    // odd W is rejected
    VertexSet odd(20);
    odd.insert(w.next(0));
    auto reg2 = built.registry;
    CHECK_THROWS_AS(absorb(k20, built.path, reg2, odd), std::invalid_argument);

    // capacity: more pairs than free registry entries
    auto small = build_absorbing_path(k20, 1, 11);
    VertexSet small_path(20);
    for (int v : small.path.verts) small_path.insert(v);
    VertexSet big(20);
    int picked = 0;
    for (int v = 0; v < 20 && picked < 4; ++v)
        if (!small_path.contains(v)) {
            big.insert(v);
            ++picked;
        }
    CHECK_THROWS_AS(absorb(k20, small.path, small.registry, big), std::invalid_argument);
}

TEST_CASE("absorbing round-trips on random subsets") {
    auto k40 = gen_complete(40);
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        int ell = 1 + (int)(seed % 5);
        auto built = build_absorbing_path(k40, ell, seed);
        CHECK(built.path.size() == 4 * ell + 2 * (ell - 1));
        VertexSet on_path(40);
        for (int v : built.path.verts) on_path.insert(v);
        std::mt19937_64 rng(seed);
        std::vector<int> off;
        for (int v = 0; v < 40; ++v)
            if (!on_path.contains(v)) off.push_back(v);
        std::shuffle(off.begin(), off.end(), rng);
        int pairs = (int)(rng() % (ell + 1));
        VertexSet w(40);
        for (int i = 0; i < 2 * pairs; ++i) w.insert(off[i]);
        auto reg = built.registry;
        auto grown = absorb(k40, built.path, reg, w);
        CHECK(grown.size() == built.path.size() + 2 * pairs);
        CHECK(grown.verts.front() == built.path.verts.front());
        CHECK(grown.verts.back() == built.path.verts.back());
    }
}

TEST_CASE("star packing on the complete digraph and the directed cycle") {
    auto p = two_in_star_packing(gen_complete(10));
    CHECK(p.stars.size() >= 2);
    CHECK(star_packing_floor(10, 9, 9) == doctest::Approx(12.0 / 51.0));

    auto cyc = two_in_star_packing(gen_oriented_cycle({1, 1, 1, 1, 1, 1}));
    CHECK(cyc.stars.empty()); // every in-degree is one
    CHECK(cyc.arcs[0].first != cyc.arcs[1].first);

    // all arcs into one vertex: no two independent arcs exist
    Digraph star(5);
    for (int v = 1; v < 5; ++v) star.add_arc(v, 0);
    CHECK_THROWS_AS(two_in_star_packing(star), std::runtime_error);
}

TEST_CASE("star packing meets the guaranteed floor") {
    const int n = 30;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(7000 + seed);
        Digraph d(n);
        std::vector<int> in_deg(n, 0);
        const int cap = n / 3;
        for (int v = 0; v < n; ++v) {
            int want = 2 + (int)(rng() % 3);
            int guard = 0;
            while (want > 0 && guard++ < 500) {
                int w = (int)(rng() % n);
                if (w == v || d.has_arc(v, w) || in_deg[w] >= cap) continue;
                d.add_arc(v, w);
                ++in_deg[w];
                --want;
            }
        }
        auto sd = semi_degrees(d);
        if (sd.delta_out < 2) continue;
        int max_in = 0;
        for (int v = 0; v < n; ++v) max_in = std::max(max_in, d.in_degree(v));
        auto p = two_in_star_packing(d);
        double floor = star_packing_floor(n, sd.delta_out, max_in);
        CHECK((double)p.stars.size() >= floor - 1e-9);
        // packed structure is real and disjoint
        std::set<int> used{p.arcs[0].first, p.arcs[0].second, p.arcs[1].first,
                           p.arcs[1].second};
        CHECK(used.size() == 4);
        for (auto& s : p.stars) {
            CHECK(d.has_arc(s.leaf1, s.center));
            CHECK(d.has_arc(s.leaf2, s.center));
            CHECK(used.insert(s.center).second);
            CHECK(used.insert(s.leaf1).second);
            CHECK(used.insert(s.leaf2).second);
        }
    }
}

TEST_CASE("exact extremal witness on the extremal family and the complete digraph") {
    FLabels l;
    auto f = gen_F(8, 1, &l);
    auto r = extremal_witness(f, 0.25, WitnessMode::exact);
    CHECK(r.exhaustive);
    REQUIRE(r.witness.has_value());
    CHECK(witness_valid(f, *r.witness));
    CHECK(max_out_degree_into(f, r.witness->a, r.witness->b) == 0);
    CHECK(max_in_degree_from(f, r.witness->b, r.witness->a) == 0);

    auto none = extremal_witness(gen_complete(8), 0.25, WitnessMode::exact);
    CHECK(none.exhaustive);
    CHECK_FALSE(none.witness.has_value());

    // alpha = 1 makes the constraints vacuous
    auto loose = extremal_witness(gen_complete(8), 1.0, WitnessMode::exact);
    CHECK(loose.witness.has_value());
}

TEST_CASE("local witness search finds the planted structure") {
    FLabels l;
    auto f = gen_F(40, 2, &l);
    auto r = extremal_witness(f, 0.3, WitnessMode::local_search, 5);
    REQUIRE(r.witness.has_value());
    CHECK(witness_valid(f, *r.witness));
    CHECK_FALSE(r.exhaustive);
}

TEST_CASE("deleting few vertices keeps non-extremal graphs non-extremal") {
    // exact scans at alpha and alpha - lambda after deleting one vertex
    const double alpha = 0.3, lambda = 0.2;
    int tested = 0;
    for (uint64_t seed = 0; seed < 60 && tested < 8; ++seed) {
        auto d = random_digraph(10, 0.75, 4000 + seed);
        auto base = extremal_witness(d, alpha, WitnessMode::exact);
        if (base.witness) continue;
        ++tested;
        for (int drop = 0; drop < 10; drop += 4) {
            VertexSet keep = VertexSet::all(10);
            keep.erase(drop);
            auto sub = induced(d, keep);
            auto r = extremal_witness(sub.graph, alpha - lambda, WitnessMode::exact);
            CHECK_FALSE(r.witness.has_value());
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("non-extremal graphs have many arcs between large sets") {
    const double alpha = 0.4;
    int tested = 0;
    for (uint64_t seed = 0; seed < 40 && tested < 4; ++seed) {
        const int n2 = 8;
        const double n = n2 / 2.0;
        auto d = random_digraph(n2, 0.8, 5100 + seed);
        if (extremal_witness(d, alpha, WitnessMode::exact).witness) continue;
        ++tested;
        int lo = (int)std::ceil((1 - alpha / 2) * n), hi = (int)std::floor((1 + alpha / 2) * n);
        for (uint32_t am = 0; am < (1u << n2); ++am) {
            if (std::popcount(am) < lo || std::popcount(am) > hi) continue;
            VertexSet a(n2);
            for (int v = 0; v < n2; ++v)
                if ((am >> v) & 1) a.insert(v);
            for (uint32_t bm = 0; bm < (1u << n2); ++bm) {
                if (std::popcount(bm) < lo || std::popcount(bm) > hi) continue;
                VertexSet b(n2);
                for (int v = 0; v < n2; ++v)
                    if ((bm >> v) & 1) b.insert(v);
                CHECK((double)arc_count(d, a, b) >= alpha * alpha / 2 * n * n - 1e-9);
            }
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("preprocessing the extremal family recovers the generator labels") {
    FLabels l;
    auto f = gen_F(8, 1, &l);
    ExtremalWitness w{l.y1 | l.x2, l.y2 | l.x2, 0.25};
    REQUIRE(witness_valid(f, w));
    auto p = preprocess(f, w, 0.25);
    CHECK(p.z.empty());
    CHECK(p.x1 == l.x1);
    CHECK(p.x2 == l.x2);
    CHECK(p.y1 == l.y1);
    CHECK(p.y2 == l.y2);
    CHECK(p.floors[0].x_opp_semi == 3); // X_2 into X_1 is complete
}

TEST_CASE("a witness with A = B empties the Y classes") {
    auto k8 = gen_complete(8);
    VertexSet a = VertexSet::of(8, {0, 1, 2, 3});
    ExtremalWitness w{a, a, 1.0};
    auto p = preprocess(k8, w, 1.0);
    CHECK(p.y1.empty());
    CHECK(p.y2.empty());
    CHECK((p.x2 | p.z) == a);
}

TEST_CASE("noisy extremal instances keep Z within the stated bound") {
    const double alpha = 0.3;
    FLabels l;
    auto f = gen_F(16, 2, &l);
    std::mt19937_64 rng(99);
    int added = 0;
    while (added < 5) {
        int u = (int)(rng() % 16), v = (int)(rng() % 16);
        if (u == v || f.has_arc(u, v)) continue;
        f.add_arc(u, v);
        ++added;
    }
    ExtremalWitness w{l.y1 | l.x2, l.y2 | l.x2, alpha};
    if (!witness_valid(f, w)) return; // noise broke the witness for this seed
    auto p = preprocess(f, w, alpha);
    CHECK((double)p.z.count() <= 3 * std::pow(alpha, 2.0 / 3.0) * 8 + 1e-9);
}

TEST_CASE("Z distribution identity and class placements") {
    FLabels l;
    auto f = gen_F(16, 2, &l);
    ExtremalWitness w{l.y1 | l.x2, l.y2 | l.x2, 0.3};
    auto p = preprocess(f, w, 0.3);
    REQUIRE(p.z.empty());
    auto parts = distribute_Z(f, p, 0.05);
    CHECK(parts.x1 == l.x1);
    CHECK(parts.x2 == l.x2);
    CHECK(parts.y1 == l.y1);
    CHECK(parts.y2 == l.y2);

    // move one X_2 vertex into Z: it receives from and sends into X_1', so it
    // belongs to Z(X_1', X_1') and is placed back into X_2
    Partition5 forced = p;
    int z = l.x2.next(0);
    forced.x2.erase(z);
    forced.z.insert(z);
    auto placed = distribute_Z(f, forced, 0.05);
    CHECK(placed.x2.contains(z));

    // a vertex adjacent only inside Z matches no class
    Partition5 bad = p;
    bad.x2.erase(z);
    bad.z.insert(z);
    Digraph stripped(16);
    for (auto [u, v] : f.arcs())
        if (u != z && v != z) stripped.add_arc(u, v);
    CHECK_THROWS_AS(distribute_Z(stripped, bad, 0.05), UnclassifiedVertex);
}
