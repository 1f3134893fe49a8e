#include "adhc/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace adhc {

bool witness_valid(const Digraph& d, const ExtremalWitness& w) {
    const double n = d.order() / 2.0;
    const double lo = (1.0 - w.alpha) * n, hi = (1.0 + w.alpha) * n;
    const double t = w.alpha * n;
    int asz = w.a.count(), bsz = w.b.count();
    if (asz < lo - 1e-9 || asz > hi + 1e-9) return false;
    if (bsz < lo - 1e-9 || bsz > hi + 1e-9) return false;
    if (max_out_degree_into(d, w.a, w.b) > t + 1e-9) return false;
    if (max_in_degree_from(d, w.b, w.a) > t + 1e-9) return false;
    return true;
}

namespace {

struct ExactScan {
    const Digraph& d;
    int n2; // order
    double t;
    int lo, hi;
    int best_m = std::numeric_limits<int>::max();
    std::optional<ExtremalWitness> best;
    double alpha;

    void consider(const VertexSet& a, const VertexSet& b) {
        int m = std::max(max_out_degree_into(d, a, b), max_in_degree_from(d, b, a));
        if (m < best_m) {
            best_m = m;
            best = ExtremalWitness{a, b, alpha};
        }
    }

    // monotone: adding a vertex to A can only raise every deg-(b, A)
    void enumerate_a(const VertexSet& b, const std::vector<int>& cand, size_t idx,
                     VertexSet& a, int asz, std::vector<int>& load) {
        if (best_m == 0) return;
        if (asz >= lo) consider(a, b);
        if (idx == cand.size() || asz == hi) return;
        if (asz + (int)(cand.size() - idx) < lo) return;

        int v = cand[idx];
        bool ok = true;
        std::vector<int> touched;
        d.for_each_out(v, [&](int u) {
            if (!b.contains(u)) return;
            touched.push_back(u);
            if (++load[u] > (int)t) ok = false;
        });
        if (ok) {
            a.insert(v);
            enumerate_a(b, cand, idx + 1, a, asz + 1, load);
            a.erase(v);
        }
        for (int u : touched) --load[u];
        enumerate_a(b, cand, idx + 1, a, asz, load);
    }
};

WitnessSearch exact_scan(const Digraph& d, double alpha) {
    const int n2 = d.order();
    if (n2 > 16) throw std::invalid_argument("exact witness scan limited to order 16");
    const double n = n2 / 2.0;
    ExactScan scan{d, n2, alpha * n, (int)std::ceil((1.0 - alpha) * n - 1e-9),
                   (int)std::floor((1.0 + alpha) * n + 1e-9),
                   std::numeric_limits<int>::max(), std::nullopt, alpha};
    scan.hi = std::min(scan.hi, n2);
    scan.lo = std::max(scan.lo, 0);

    for (uint32_t mask = 0; mask < (1u << n2); ++mask) {
        int bsz = std::popcount(mask);
        if (bsz < scan.lo || bsz > scan.hi) continue;
        VertexSet b(n2);
        for (int v = 0; v < n2; ++v)
            if ((mask >> v) & 1) b.insert(v);

        std::vector<int> cand;
        for (int v = 0; v < n2; ++v)
            if ((double)d.out_degree_in(v, b) <= scan.t + 1e-9) cand.push_back(v);
        if ((int)cand.size() < scan.lo) continue;

        VertexSet a(n2);
        std::vector<int> load(n2, 0);
        scan.enumerate_a(b, cand, 0, a, 0, load);
        if (scan.best_m == 0) break;
    }
    return {scan.best, true};
}

WitnessSearch local_scan(const Digraph& d, double alpha, uint64_t seed) {
    const int n2 = d.order();
    const int n = n2 / 2;
    const double t = alpha * n;
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n2);
    std::iota(perm.begin(), perm.end(), 0);

    for (int restart = 0; restart < 48; ++restart) {
        std::shuffle(perm.begin(), perm.end(), rng);
        VertexSet a(n2), b(n2);
        for (int i = 0; i < n; ++i) b.insert(perm[i]);

        // alternating minimisation: rebuild A from B and B from A
        for (int round = 0; round < 24; ++round) {
            std::vector<std::pair<int, int>> keyed;
            keyed.reserve(n2);
            for (int v = 0; v < n2; ++v) keyed.push_back({d.out_degree_in(v, b), v});
            std::sort(keyed.begin(), keyed.end());
            VertexSet na(n2);
            for (int i = 0; i < n; ++i) na.insert(keyed[i].second);

            keyed.clear();
            for (int v = 0; v < n2; ++v) keyed.push_back({d.in_degree_in(v, na), v});
            std::sort(keyed.begin(), keyed.end());
            VertexSet nb(n2);
            for (int i = 0; i < n; ++i) nb.insert(keyed[i].second);

            bool stable = na == a && nb == b;
            a = na;
            b = nb;
            if (stable) break;
        }
        if ((double)max_out_degree_into(d, a, b) <= t + 1e-9 &&
            (double)max_in_degree_from(d, b, a) <= t + 1e-9) {
            ExtremalWitness w{a, b, alpha};
            if (witness_valid(d, w)) return {w, false};
        }
    }
    return {std::nullopt, false};
}

} // namespace

WitnessSearch extremal_witness(const Digraph& d, double alpha, WitnessMode mode,
                               uint64_t seed) {
    if (mode == WitnessMode::exact) return exact_scan(d, alpha);
    return local_scan(d, alpha, seed);
}

namespace {

int semi_into(const Digraph& d, int v, const VertexSet& s) {
    return std::min(d.out_degree_in(v, s), d.in_degree_in(v, s));
}

int min_over(const VertexSet& s, auto&& f) {
    int m = -1;
    s.for_each([&](int v) {
        int x = f(v);
        if (m < 0 || x < m) m = x;
    });
    return m;
}

} // namespace

Partition5 preprocess(const Digraph& d, const ExtremalWitness& w, double alpha) {
    if (!witness_valid(d, w)) throw std::invalid_argument("witness invalid for this digraph");
    const double n = d.order() / 2.0;
    const double th = std::pow(alpha, 1.0 / 3.0) * n;

    VertexSet xt1 = (w.a | w.b).complement();
    VertexSet xt2 = w.a & w.b;
    VertexSet yt1 = w.a - w.b;
    VertexSet yt2 = w.b - w.a;

    auto deficient = [&](int have, int full) { return (double)have < (double)full - th; };

    VertexSet hy1(d.order()), hy2(d.order()), hx1(d.order());
    yt1.for_each([&](int v) {
        if (deficient(d.in_degree_in(v, xt2), xt2.count()) ||
            deficient(d.in_degree_in(v, yt1), yt1.count()))
            hy1.insert(v);
    });
    yt2.for_each([&](int v) {
        if (deficient(d.out_degree_in(v, xt2), xt2.count()) ||
            deficient(d.out_degree_in(v, yt2), yt2.count()))
            hy2.insert(v);
    });
    xt1.for_each([&](int v) {
        if (deficient(d.in_degree_in(v, yt1), yt1.count()) ||
            deficient(d.out_degree_in(v, yt2), yt2.count()) ||
            deficient(semi_into(d, v, xt2), xt2.count()))
            hx1.insert(v);
    });

    Partition5 p;
    p.x1 = xt1 - hx1;
    p.x2 = xt2;
    p.y1 = yt1 - hy1;
    p.y2 = yt2 - hy2;
    p.z = hx1 | hy1 | hy2;

    const VertexSet* xs[2] = {&p.x1, &p.x2};
    const VertexSet* ys[2] = {&p.y1, &p.y2};
    for (int i = 0; i < 2; ++i) {
        auto& f = p.floors[i];
        const VertexSet &xi = *xs[i], &yi = *ys[i];
        const VertexSet &xo = *xs[1 - i], &yo = *ys[1 - i];
        f.x_opp_semi = min_over(xo, [&](int v) { return semi_into(d, v, xi); });
        f.y_opp_in = min_over(yo, [&](int v) { return d.in_degree_in(v, xi); });
        f.y_same_out = min_over(yi, [&](int v) { return d.out_degree_in(v, xi); });
        f.y_same_semi = min_over(yi, [&](int v) { return semi_into(d, v, yi); });
        f.x_same_in = min_over(xi, [&](int v) { return d.in_degree_in(v, yi); });
        f.x_opp_out = min_over(xo, [&](int v) { return d.out_degree_in(v, yi); });
    }
    return p;
}

FourParts distribute_Z(const Digraph& d, const Partition5& p, double gamma) {
    const double th = 5.0 * gamma * (d.order() / 2.0);
    FourParts out{p.x1, p.x2, p.y1, p.y2};

    auto member = [&](int z, const VertexSet& in_from, const VertexSet& out_to) {
        return (double)d.out_degree_in(z, out_to) >= th &&
               (double)d.in_degree_in(z, in_from) >= th;
    };

    const VertexSet* xs[2] = {&p.x1, &p.x2};
    const VertexSet* ys[2] = {&p.y1, &p.y2};
    VertexSet* dest_x[2] = {&out.x1, &out.x2};
    VertexSet* dest_y[2] = {&out.y1, &out.y2};

    p.z.for_each([&](int z) {
        // the first matching class decides the placement
        for (int i = 0; i < 2; ++i)
            if (member(z, *xs[i], *xs[i])) {
                dest_x[1 - i]->insert(z);
                return;
            }
        for (int i = 0; i < 2; ++i)
            if (member(z, *ys[i], *ys[i])) {
                dest_y[i]->insert(z);
                return;
            }
        for (int i = 0; i < 2; ++i)
            if (member(z, *xs[i], *xs[1 - i])) {
                dest_y[1 - i]->insert(z);
                return;
            }
        for (int i = 0; i < 2; ++i)
            if (member(z, *ys[i], *ys[1 - i])) {
                dest_x[i]->insert(z);
                return;
            }
        bool z1 = true, z2 = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (!member(z, *ys[i], *xs[j])) z1 = false;
                if (!member(z, *xs[i], *ys[j])) z2 = false;
            }
        if (z1) {
            dest_y[0]->insert(z);
            return;
        }
        if (z2) {
            dest_y[1]->insert(z);
            return;
        }
        throw UnclassifiedVertex(z);
    });
    return out;
}

} // namespace adhc
