#pragma once

#include "adhc/bip_ham.hpp"
#include "adhc/digraph.hpp"
#include "adhc/walk.hpp"

#include <optional>

namespace adhc {

struct SolveResult {
    SolveStatus status = SolveStatus::absent;
    std::optional<OrientedWalk> walk;
    uint64_t nodes = 0;
};

// Exact anti-directed Hamiltonian cycle search.  Core reduction: an ADHC
// exists iff some balanced source/sink bipartition (S,T) admits a Hamiltonian
// cycle in the bipartite graph of S->T arcs; the solver branches on role
// assignments with arc-availability propagation.
SolveResult solve_adhc(const Digraph& d, const SolverConfig& cfg = {});

// Exhaustive search over cyclic vertex orders; ground truth oracle for
// equivalence tests, independent of the bipartition reduction.
SolveResult solve_adhc_naive(const Digraph& d);

// Spanning anti-directed path (either phase).
SolveResult solve_adhp(const Digraph& d, const SolverConfig& cfg = {});

// Maximum-length proper anti-directed path; walk always present (possibly
// empty), status reports whether the search ran to completion.
SolveResult longest_proper_adp(const Digraph& d, const SolverConfig& cfg = {});

struct TwoFactorResult {
    SolveStatus status = SolveStatus::absent;
    std::optional<TwoFactorCert> cert;
    uint64_t nodes = 0;
};

// Anti-directed 2-factor with at most max_cycles cycles.
TwoFactorResult solve_anti_two_factor(const Digraph& d, int max_cycles,
                                      const SolverConfig& cfg = {});

SolveResult solve_directed_hc(const Digraph& d, const SolverConfig& cfg = {});

struct EmbedResult {
    SolveStatus status = SolveStatus::absent;
    // map[p] = host vertex carrying pattern vertex p
    std::optional<std::vector<int>> map;
    uint64_t nodes = 0;
};

// Spanning embedding: injective vertex map sending every pattern arc to a
// host arc.  Orders must match.
EmbedResult embed_spanning(const Digraph& host, const Digraph& pattern,
                           const SolverConfig& cfg = {});

} // namespace adhc
