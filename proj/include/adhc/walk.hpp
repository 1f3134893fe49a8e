#pragma once

#include "adhc/digraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adhc {

// Vertex sequence plus per-edge orientation bits.  Bit i true means the arc
// runs forward, (v_i, v_{i+1}); false means (v_{i+1}, v_i).  A cycle has one
// bit per vertex (the last edge wraps), a path one fewer.
struct OrientedWalk {
    enum class Kind { path, cycle };

    Kind kind = Kind::path;
    std::vector<int> verts;
    std::vector<uint8_t> bits;

    int size() const { return (int)verts.size(); }
    int edge_count() const { return (int)bits.size(); }

    // Proper anti-directed path on an even number of vertices: bits alternate
    // starting (and therefore ending) forward.
    static OrientedWalk proper_path(std::vector<int> vs);
    static OrientedWalk alternating_cycle(std::vector<int> vs);
    static OrientedWalk directed_cycle(std::vector<int> vs);
};

struct TwoFactorCert {
    std::vector<OrientedWalk> cycles;
};

struct WalkRequire {
    bool anti_directed = false;
    bool proper = false;
    bool spanning = false;
    bool directed = false;
};

struct Verdict {
    bool ok = true;
    std::string reason; // first violated predicate
    explicit operator bool() const { return ok; }
};

// Trust anchor: checks claimed arcs against the digraph and every requested
// structural predicate.  Never trusts the producer.
Verdict verify_walk(const Digraph& d, const OrientedWalk& w, const WalkRequire& req = {});

Verdict verify_two_factor(const Digraph& d, const TwoFactorCert& c);

} // namespace adhc
