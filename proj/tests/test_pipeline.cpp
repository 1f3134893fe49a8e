#include "doctest.h"

#include "adhc/exact.hpp"
#include "adhc/families.hpp"
#include "adhc/pipeline.hpp"

#include <random>

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

void check_cert(const Digraph& d, const PipelineReport& rep) {
    REQUIRE(rep.cert.has_value());
    WalkRequire req;
    req.anti_directed = true;
    req.spanning = true;
    CHECK(verify_walk(d, *rep.cert, req).ok);
}

} // namespace

TEST_CASE("dense instances go through the random-split route") {
    PipelineConfig cfg;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto d = random_digraph(60, 0.75, 60 * seed);
        auto rep = heuristic_adhc(d, cfg, seed);
        REQUIRE(rep.outcome == PipelineReport::Outcome::adhc);
        CHECK(rep.route == PipelineReport::Route::random_split);
        check_cert(d, rep);
    }
}

TEST_CASE("small orders are settled exactly") {
    PipelineConfig cfg;
    auto rep = heuristic_adhc(gen_F1(12), cfg, 1);
    CHECK(rep.outcome == PipelineReport::Outcome::absent_proven);
    CHECK(rep.route == PipelineReport::Route::exact);

    auto found = heuristic_adhc(gen_complete(8), cfg, 1);
    CHECK(found.outcome == PipelineReport::Outcome::adhc);
    CHECK(found.route == PipelineReport::Route::exact);
    check_cert(gen_complete(8), found);

    auto odd = heuristic_adhc(gen_complete(7), cfg, 1);
    CHECK(odd.outcome == PipelineReport::Outcome::absent_proven);
}

TEST_CASE("large exceptions are recognized") {
    PipelineConfig cfg;
    cfg.route1_retries = 6; // the exceptions defeat route 1 by construction
    auto rep = heuristic_adhc(gen_F1(200), cfg, 3);
    CHECK(rep.outcome == PipelineReport::Outcome::exception_f1);
    CHECK(rep.route == PipelineReport::Route::extremal);

    auto rep2 = heuristic_adhc(gen_F2(200), cfg, 3);
    CHECK(rep2.outcome == PipelineReport::Outcome::exception_f2);
}

TEST_CASE("near-extremal instances go through the extremal route") {
    // the extremal family plus matchings between the Y classes: still
    // extremal, not an exception, and rich enough to cross-connect
    FLabels l;
    auto d = gen_F(200, 5, &l);
    auto y1 = l.y1.to_vector(), y2 = l.y2.to_vector();
    for (size_t i = 0; i < y1.size(); ++i) {
        d.add_arc(y1[i], y2[i]);
        d.add_arc(y2[i], y1[(i + 1) % y2.size()]);
    }
    PipelineConfig cfg;
    cfg.route1_retries = 0; // drive the search into the structural route
    auto rep = heuristic_adhc(d, cfg, 2);
    REQUIRE(rep.outcome == PipelineReport::Outcome::adhc);
    CHECK(rep.route == PipelineReport::Route::extremal);
    check_cert(d, rep);

    // with the bipartition route enabled the instance is still solved
    PipelineConfig dflt;
    auto rep2 = heuristic_adhc(d, dflt, 2);
    CHECK(rep2.outcome == PipelineReport::Outcome::adhc);
    check_cert(d, rep2);
}

TEST_CASE("route-1 success is monotone in density") {
    PipelineConfig cfg;
    cfg.route1_retries = 12;
    const int runs = 20;
    double prev_rate = -1.0, prev_se = 0.0;
    for (double p : {0.6, 0.7, 0.8, 0.9}) {
        int ok = 0;
        for (uint64_t seed = 1; seed <= runs; ++seed) {
            auto d = random_digraph(120, p, (uint64_t)(p * 1000) + seed);
            auto rep = heuristic_adhc(d, cfg, seed);
            ok += rep.outcome == PipelineReport::Outcome::adhc;
        }
        double rate = (double)ok / runs;
        double se = std::sqrt(rate * (1 - rate) / runs);
        if (prev_rate >= 0) CHECK(rate >= prev_rate - 2 * (se + prev_se));
        prev_rate = rate;
        prev_se = se;
    }
}

TEST_CASE("counterexample search is deterministic and oracle-checked") {
    CounterexampleConfig cfg;
    auto found = counterexample_search(8, 300, 4, 42, cfg);
    for (const auto& d : found) {
        CHECK(semi_degrees(d).delta0 >= 4);
        CHECK(solve_adhc_naive(d).status == SolveStatus::absent);
        CHECK(recognize_exception(d).kind == ExceptionKind::none);
    }

    auto again = counterexample_search(8, 300, 4, 42, cfg);
    REQUIRE(again.size() == found.size());
    for (size_t i = 0; i < found.size(); ++i) CHECK(again[i] == found[i]);

    // thread count does not change the result
    CounterexampleConfig two;
    two.jobs = 2;
    auto parallel = counterexample_search(8, 300, 4, 42, two);
    REQUIRE(parallel.size() == found.size());
    for (size_t i = 0; i < found.size(); ++i) CHECK(parallel[i] == found[i]);

    // a complete-digraph floor yields nothing
    CHECK(counterexample_search(8, 50, 7, 7, cfg).empty());

    CHECK_THROWS_AS(counterexample_search(7, 10, 3, 1, cfg), std::invalid_argument);
}
