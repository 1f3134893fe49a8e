#include "doctest.h"

#include "adhc/exact.hpp"
#include "adhc/families.hpp"

#include <numeric>
#include <random>

using namespace adhc;

namespace {

Digraph shuffled(const Digraph& d, uint64_t seed, std::vector<int>* perm_out = nullptr) {
    std::vector<int> perm(d.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph out(d.order());
    for (auto [u, v] : d.arcs()) out.add_arc(perm[u], perm[v]);
    if (perm_out) *perm_out = perm;
    return out;
}

} // namespace

TEST_CASE("extremal family arc counts and degrees") {
    auto f = gen_F(8, 1);
    CHECK(f.arc_count() == 30);
    CHECK(semi_degrees(f).delta0 == 3);

    // X vertices have both degrees n/2, Y vertices n/2 - 1, for all n <= 16
    for (int n = 4; n <= 16; n += 2) {
        for (int k = 0; k <= n / 2; ++k) {
            FLabels l;
            auto d = gen_F(n, k, &l);
            (l.x1 | l.x2).for_each([&](int v) {
                CHECK(d.out_degree(v) == n / 2);
                CHECK(d.in_degree(v) == n / 2);
            });
            (l.y1 | l.y2).for_each([&](int v) {
                CHECK(d.out_degree(v) == n / 2 - 1);
                CHECK(d.in_degree(v) == n / 2 - 1);
            });
            if (k >= 1) CHECK(semi_degrees(d).delta0 == n / 2 - 1);
            else CHECK(semi_degrees(d).delta0 == n / 2);
        }
    }
}

TEST_CASE("degenerate k = n/2 leaves only digon-connected Y blocks") {
    FLabels l;
    auto d = gen_F(4, 2, &l);
    CHECK(l.x1.empty());
    CHECK(l.x2.empty());
    CHECK(d.arc_count() == 4); // two digons, one per Y block
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
    CHECK(d.has_arc(2, 3));
    CHECK(d.has_arc(3, 2));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(gen_F(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_F(8, 5), std::invalid_argument);
    CHECK_THROWS_AS(gen_F(8, -1), std::invalid_argument);
    CHECK_THROWS_AS(gen_F1(2), std::invalid_argument);
}

TEST_CASE("the two exceptions") {
    FLabels l1;
    auto f1 = gen_F1(8, &l1);
    CHECK(f1.arc_count() == 32);
    CHECK(semi_degrees(f1).delta0 == 4);
    CHECK(f1.has_arc(l1.y1_vertex, l1.y2_vertex));
    CHECK(f1.has_arc(l1.y2_vertex, l1.y1_vertex));

    FLabels l2;
    auto f2 = gen_F2(8, &l2);
    CHECK(f2.arc_count() == 33);
    CHECK(semi_degrees(f2).delta0 == 4);
    CHECK(f2.has_arc(l2.y1_vertex, l2.y2_vertex));
    CHECK(f2.has_arc(l2.y2_vertex, l2.x_special));
    CHECK(f2.has_arc(l2.x_special, l2.y1_vertex));
}

TEST_CASE("ladders") {
    CHECK(gen_ladder(3).edge_count() == 7);
    for (int n = 1; n <= 12; ++n) CHECK(gen_ladder(n).edge_count() == 3 * n - 2);
    auto l1 = gen_ladder(1);
    CHECK(l1.size() == 2);
    CHECK(l1.edge_count() == 1);

    auto al = gen_anti_ladder(4);
    CHECK(al.arc_count() == 10);
    for (auto [u, v] : al.arcs()) {
        CHECK(u < 4);
        CHECK(v >= 4);
    }
}

TEST_CASE("anti-directed ladder hosts a spanning anti-directed cycle") {
    for (int n = 2; n <= 6; ++n) {
        auto res = solve_adhc(gen_anti_ladder(n));
        CHECK(res.status == SolveStatus::found);
    }
}

TEST_CASE("oriented cycles") {
    auto c6 = gen_oriented_cycle({1, 1, 1, 1, 1, 1});
    CHECK(c6.arc_count() == 6);
    CHECK(semi_degrees(c6).delta0 == 1);

    auto a6 = gen_anti_cycle(6);
    auto res = solve_adhc(a6);
    CHECK(res.status == SolveStatus::found);

    CHECK_THROWS_AS(gen_anti_cycle(7), std::invalid_argument);
    CHECK_THROWS_AS(gen_oriented_cycle({1, 0}), std::invalid_argument);
}

TEST_CASE("random sampler hits the semi-degree floor deterministically") {
    auto d = gen_random_min_semidegree(12, 7, 1);
    CHECK(semi_degrees(d).delta0 >= 7);

    auto again = gen_random_min_semidegree(12, 7, 1);
    CHECK(d == again);

    auto complete = gen_random_min_semidegree(9, 8, 5);
    CHECK(complete.arc_count() == 72);

    CHECK_THROWS_AS(gen_random_min_semidegree(6, 6, 1), std::invalid_argument);

    for (uint64_t seed = 10; seed < 30; ++seed) {
        auto g = gen_random_min_semidegree(20, 11, seed);
        CHECK(semi_degrees(g).delta0 >= 11);
    }
}

TEST_CASE("recognizer identifies shuffled exceptions of every even order") {
    for (int n = 4; n <= 24; n += 2) {
        auto f1 = gen_F1(n);
        auto f2 = gen_F2(n);
        int shuffles = n <= 6 ? 10 : 50;
        for (int s = 0; s < shuffles; ++s) {
            auto g1 = shuffled(f1, 100 * n + s);
            auto r1 = recognize_exception(g1);
            REQUIRE(r1.kind == ExceptionKind::f1);
            // returned relabelling is an exact isomorphism onto the generator
            auto canon = gen_F1(n);
            for (auto [u, v] : g1.arcs())
                CHECK(canon.has_arc(r1.to_canonical[u], r1.to_canonical[v]));

            auto g2 = shuffled(f2, 200 * n + s);
            auto r2 = recognize_exception(g2);
            REQUIRE(r2.kind == ExceptionKind::f2);
        }
    }
}

TEST_CASE("recognizer rejects near-misses") {
    CHECK(recognize_exception(gen_complete(12)).kind == ExceptionKind::none);
    CHECK(recognize_exception(gen_F(12, 1)).kind == ExceptionKind::none);
    CHECK(recognize_exception(gen_F(12, 2)).kind == ExceptionKind::none);

    // one extra arc breaks edge-maximal structure
    auto f2 = gen_F2(12);
    for (int u = 0; u < 4; ++u) {
        auto g = f2;
        bool added = false;
        for (int v = 0; v < 12 && !added; ++v)
            if (u != v && !g.has_arc(u, v)) {
                g.add_arc(u, v);
                added = true;
            }
        REQUIRE(added);
        CHECK(recognize_exception(g).kind == ExceptionKind::none);
    }

    // one missing arc likewise
    auto f1 = gen_F1(12);
    auto arcs = f1.arcs();
    for (size_t i = 0; i < arcs.size(); i += 7) {
        Digraph g(12);
        for (size_t j = 0; j < arcs.size(); ++j)
            if (j != i) g.add_arc(arcs[j].first, arcs[j].second);
        CHECK(recognize_exception(g).kind == ExceptionKind::none);
    }
}
