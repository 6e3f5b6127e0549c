// Fixture families, the star reduction, and uniform-random-cut experiments.
#pragma once

#include <cstdint>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ftcut/graph.hpp"

namespace ftcut {

// splitmix64; per-trial seeds derive from (master seed, index) so parallel and
// serial runs agree.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Thin deterministic wrapper over mt19937_64: bounded ints by rejection,
// avoiding the implementation-defined std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw ValidationError("Rng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t v = eng_();
            if (v < limit) return v % n;
        }
    }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

// --- instance families ----------------------------------------------------

struct SharedTriangles { int t = 1; };           // t triangles on a common apex
struct PathLeaf {};                              // 5-path with a leaf on the 4th vertex
struct CycleSpec { int n = 3; };
struct HeavyCycle { int n = 4; };                // two heavy non-adjacent edges of weight n(n-3)
struct StarSpec { int leaves = 1; };
struct RandomConnected { int n = 2; double p = 0.5; std::uint64_t seed = 0; };

using FamilySpec =
    std::variant<SharedTriangles, PathLeaf, CycleSpec, HeavyCycle, StarSpec, RandomConnected>;

inline Graph generate(const FamilySpec& spec) {
    using E = WeightedEdge<Weight>;
    struct Visitor {
        Graph operator()(const SharedTriangles& s) const {
            if (s.t < 1) throw ValidationError("shared-triangles: t must be >= 1");
            std::vector<E> edges;
            for (int i = 0; i < s.t; ++i) {
                int a = 1 + 2 * i, b = 2 + 2 * i;
                edges.push_back({0, a, 1});
                edges.push_back({0, b, 1});
                edges.push_back({a, b, 1});
            }
            return Graph(2 * s.t + 1, std::move(edges));
        }
        Graph operator()(const PathLeaf&) const {
            return Graph(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}});
        }
        Graph operator()(const CycleSpec& c) const {
            if (c.n < 3) throw ValidationError("cycle: n must be >= 3");
            std::vector<E> edges;
            for (int i = 0; i < c.n; ++i) edges.push_back({i, (i + 1) % c.n, 1});
            return Graph(c.n, std::move(edges));
        }
        Graph operator()(const HeavyCycle& h) const {
            if (h.n < 4) throw ValidationError("heavy-cycle: n must be >= 4");
            const Weight heavy = static_cast<Weight>(h.n) * (h.n - 3);
            std::vector<E> edges;
            for (int i = 0; i < h.n; ++i) {
                Weight w = (i == 0 || i == 2) ? heavy : 1;
                edges.push_back({i, (i + 1) % h.n, w});
            }
            return Graph(h.n, std::move(edges));
        }
        Graph operator()(const StarSpec& s) const {
            if (s.leaves < 1) throw ValidationError("star: leaf count must be >= 1");
            std::vector<E> edges;
            for (int i = 1; i <= s.leaves; ++i) edges.push_back({0, i, 1});
            return Graph(s.leaves + 1, std::move(edges));
        }
        Graph operator()(const RandomConnected& r) const {
            if (r.n < 1) throw ValidationError("random-connected: n must be >= 1");
            if (!(r.p >= 0 && r.p <= 1))
                throw ValidationError("random-connected: p must lie in [0,1]");
            Rng rng(mix_seed(r.seed, 0));
            std::vector<E> edges;
            // Random attachment tree for connectivity, then extra G(n,p) edges.
            for (int v = 1; v < r.n; ++v)
                edges.push_back({rng.range(0, v - 1), v, 1});
            Graph tree(r.n, edges);
            for (int u = 0; u < r.n; ++u) {
                for (int v = u + 1; v < r.n; ++v) {
                    bool present = false;
                    for (int ei : tree.incident(u)) {
                        const auto& e = tree.edge(ei);
                        if (e.u + e.v - u == v) present = true;
                    }
                    if (!present && rng.unit() < r.p) edges.push_back({u, v, 1});
                }
            }
            return Graph(r.n, std::move(edges));
        }
    };
    return std::visit(Visitor{}, spec);
}

// Hardness-reduction construction: disjoint star with n leaves and center u*,
// plus the edge {u*, v_0}. Vertex layout: originals 0..n-1, u* = n, leaves
// n+1..2n.
inline Graph star_reduction(const Graph& g) {
    if (!g.is_unweighted()) throw ValidationError("star_reduction: weighted input rejected");
    const int n = g.n();
    if (n < 1) throw ValidationError("star_reduction: graph must have at least one vertex");
    std::vector<WeightedEdge<Weight>> edges(g.edges());
    const int center = n;
    for (int i = 1; i <= n; ++i) edges.push_back({center, n + i, 1});
    edges.push_back({0, center, 1});
    return Graph(2 * n + 1, std::move(edges));
}

// --- uniform random cut experiments ----------------------------------------

struct RandomCutExact {};
struct RandomCutMonteCarlo {
    std::int64_t trials = 10000;
    std::uint64_t seed = 0;
};
using RandomCutMode = std::variant<RandomCutExact, RandomCutMonteCarlo>;

struct RandomCutResult {
    double mean = 0;
    double stderr_of_mean = 0; // 0 in exact mode
    std::int64_t trials = 0;   // 2^n in exact mode
    bool exact = false;
    // Exact mode only: mean = phi_total / 2^n as an exact rational.
    Weight phi_total = 0;
};

// E[phi(S,k)] over the uniform distribution on all 2^n cuts, either exactly
// (full enumeration) or by seeded Monte-Carlo with mean and standard error.
inline RandomCutResult uniform_random_cut_ft(const Graph& g, int k, const RandomCutMode& mode) {
    if (k < 0 || k > g.n()) throw ValidationError("uniform_random_cut_ft: fault budget out of range");
    RandomCutResult result;
    if (std::holds_alternative<RandomCutExact>(mode)) {
        if (g.n() > 20)
            throw ValidationError("uniform_random_cut_ft: exact mode capped at n = 20");
        const std::int64_t count = std::int64_t{1} << g.n();
        Weight total = 0;
        for (std::int64_t mask = 0; mask < count; ++mask) {
            Cut s = Cut::from_mask(g.n(), static_cast<std::uint64_t>(mask));
            total += ft_value(g, s, k);
        }
        result.exact = true;
        result.trials = count;
        result.phi_total = total;
        result.mean = static_cast<double>(total) / static_cast<double>(count);
        return result;
    }
    const auto& mc = std::get<RandomCutMonteCarlo>(mode);
    if (mc.trials < 1) throw ValidationError("uniform_random_cut_ft: trials must be >= 1");
    double sum = 0, sumsq = 0;
    for (std::int64_t t = 0; t < mc.trials; ++t) {
        Rng rng(mix_seed(mc.seed, static_cast<std::uint64_t>(t)));
        Cut s(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (rng.coin()) s.set(v, true);
        double phi = static_cast<double>(ft_value(g, s, k));
        sum += phi;
        sumsq += phi * phi;
    }
    const double trials = static_cast<double>(mc.trials);
    result.mean = sum / trials;
    if (mc.trials > 1) {
        double var = (sumsq - sum * sum / trials) / (trials - 1);
        result.stderr_of_mean = std::sqrt(std::max(0.0, var) / trials);
    }
    result.trials = mc.trials;
    return result;
}

} // namespace ftcut
