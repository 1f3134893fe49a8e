#pragma once

#include "adhc/exact.hpp"
#include "adhc/extremal.hpp"
#include "adhc/families.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adhc {

struct PipelineReport {
    enum class Outcome { adhc, exception_f1, exception_f2, absent_proven, inconclusive };
    enum class Route { none, exact, random_split, extremal };

    Outcome outcome = Outcome::inconclusive;
    Route route = Route::none;
    std::optional<OrientedWalk> cert; // verifier-passing when outcome == adhc
    int retries_used = 0;
    uint64_t nodes = 0;
    double elapsed_ms = 0.0;
    std::string note;
};

const char* to_string(PipelineReport::Outcome o);
const char* to_string(PipelineReport::Route r);

struct PipelineConfig {
    Params params;
    SolverConfig solver;
    int route1_retries = 50;
    uint64_t route1_node_budget = 200'000; // exact fallback cap per bipartition
    int split_target_attempts = 8;         // target vectors tried on route 2
    int split_retries = 16;                // redraws per target vector
};

// End-to-end search: the exact solver settles small orders; large orders try
// repeated random balanced bipartitions first and the extremal machinery
// second.  adhc outcomes always carry verified certificates; absent_proven
// only ever comes from the exact route.
PipelineReport heuristic_adhc(const Digraph& d, const PipelineConfig& cfg, uint64_t seed);

struct CounterexampleConfig {
    SolverConfig solver;
    int jobs = 1;
};

// Samples min-semi-degree instances, keeps those the exact solver proves
// ADHC-free and the recognizer does not match.  Deterministic per seed and
// independent of the job count.
std::vector<Digraph> counterexample_search(int size, int trials, int degree_floor,
                                           uint64_t seed,
                                           const CounterexampleConfig& cfg = {});

} // namespace adhc
