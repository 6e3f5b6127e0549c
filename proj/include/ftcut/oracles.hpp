// Deterministic brute-force baselines: exact Max-Cut, exact k-AFTcut, exact
// Simultaneous Max-Cut, and the exact k-OFTcut value via the configuration LP.
// These are both the desk-scale oracles plugged into the approximation
// pipelines and the ground truth the test suites compare against.
//
// Determinism contract: identical instances yield identical cuts. Enumeration
// fixes vertex 0 outside the cut (complement symmetry) and scans masks in
// ascending order with strict improvement, so the witness is the cut whose
// bit-vector reads as the smallest integer among those optima.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftcut/distribution.hpp"
#include "ftcut/graph.hpp"
#include "ftcut/lp.hpp"

namespace ftcut {

namespace detail {
inline void check_enumeration_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw ValidationError(std::string(what) + ": vertex count " + std::to_string(n) +
                              " above enumeration cap " + std::to_string(cap));
}
} // namespace detail

template <typename W>
struct MaxCutResult {
    Cut cut;
    W value{};
};

template <typename W>
MaxCutResult<W> exact_max_cut(const WeightedGraph<W>& g, int cap = 26) {
    detail::check_enumeration_cap(g.n(), cap, "exact_max_cut");
    const int n = g.n();
    if (n == 0) return {Cut(0), W{0}};
    MaxCutResult<W> best{Cut(n), W{0}};
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t half = 0; half < count; ++half) {
        const std::uint64_t mask = half << 1;
        W value{0};
        for (const auto& e : g.edges())
            if (((mask >> e.u) ^ (mask >> e.v)) & 1u) value += e.w;
        if (value > best.value) {
            best.value = value;
            best.cut = Cut::from_mask(n, mask);
        }
    }
    return best;
}

namespace detail {

// Per-cut scratch for fast phi evaluation: crossing degrees and the crossing
// adjacency matrix (to correct for edges inside the fault set).
template <typename W>
struct PhiScratch {
    std::vector<W> deg;
    std::vector<W> cross; // n*n crossing-edge weights
    int n = 0;

    void reset(int n_) {
        n = n_;
        deg.assign(n, W{0});
        cross.assign(static_cast<std::size_t>(n) * n, W{0});
    }

    template <typename G>
    void fill(const G& g, std::uint64_t mask) {
        reset(g.n());
        for (const auto& e : g.edges()) {
            if (((mask >> e.u) ^ (mask >> e.v)) & 1u) {
                deg[e.u] += e.w;
                deg[e.v] += e.w;
                cross[static_cast<std::size_t>(e.u) * n + e.v] = e.w;
            }
        }
    }

    W fault_crossing(std::span<const int> f) const {
        W d{0};
        for (std::size_t i = 0; i < f.size(); ++i) {
            d += deg[f[i]];
            for (std::size_t j = i + 1; j < f.size(); ++j)
                d -= cross[static_cast<std::size_t>(f[i]) * n + f[j]];
        }
        return d;
    }
};

template <typename W, typename G>
W phi_from_scratch(const G& g, const PhiScratch<W>& scratch, W cut_val, int k) {
    if (k == 0) return cut_val;
    if (k == 1) {
        W worst{0};
        for (int v = 0; v < g.n(); ++v)
            if (scratch.deg[v] > worst) worst = scratch.deg[v];
        return cut_val - worst;
    }
    W worst{0};
    for_each_combination(g.n(), k, [&](const std::vector<int>& ids) {
        W d = scratch.fault_crossing(ids);
        if (d > worst) worst = d;
    });
    return cut_val - worst;
}

} // namespace detail

// argmax_S phi(S, k, G) by full enumeration.
template <typename W>
MaxCutResult<W> exact_aftcut(const WeightedGraph<W>& g, int k, int cap = 26) {
    detail::check_enumeration_cap(g.n(), cap, "exact_aftcut");
    if (k < 0 || k > g.n()) throw ValidationError("exact_aftcut: fault budget out of range");
    if (k > 6) throw ValidationError("exact_aftcut: fault budget above enumeration cap");
    const int n = g.n();
    if (n == 0) return {Cut(0), W{0}};
    detail::PhiScratch<W> scratch;
    MaxCutResult<W> best{Cut(n), W{0}};
    bool first = true;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t half = 0; half < count; ++half) {
        const std::uint64_t mask = half << 1;
        W value{0};
        for (const auto& e : g.edges())
            if (((mask >> e.u) ^ (mask >> e.v)) & 1u) value += e.w;
        scratch.fill(g, mask);
        W phi = detail::phi_from_scratch(g, scratch, value, k);
        if (first || phi > best.value) {
            best.value = phi;
            best.cut = Cut::from_mask(n, mask);
            first = false;
        }
    }
    return best;
}

// argmax_S min_i C_{S,G_i} over graphs sharing a vertex set.
template <typename W>
MaxCutResult<W> exact_simultaneous_max_cut(std::span<const WeightedGraph<W>> graphs,
                                           int cap = 26) {
    if (graphs.empty())
        throw ValidationError("exact_simultaneous_max_cut: no instances");
    const int n = graphs.front().n();
    for (const auto& g : graphs)
        if (g.n() != n) throw ValidationError("exact_simultaneous_max_cut: mismatched vertex sets");
    detail::check_enumeration_cap(n, cap, "exact_simultaneous_max_cut");
    if (n == 0) return {Cut(0), W{0}};
    MaxCutResult<W> best{Cut(n), W{0}};
    bool first = true;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t half = 0; half < count; ++half) {
        const std::uint64_t mask = half << 1;
        W worst{0};
        bool worst_set = false;
        for (const auto& g : graphs) {
            W value{0};
            for (const auto& e : g.edges())
                if (((mask >> e.u) ^ (mask >> e.v)) & 1u) value += e.w;
            if (!worst_set || value < worst) {
                worst = value;
                worst_set = true;
            }
        }
        if (first || worst > best.value) {
            best.value = worst;
            best.cut = Cut::from_mask(n, mask);
            first = false;
        }
    }
    return best;
}

// Classic 1/2-approximation: flip any vertex with crossing degree below half
// its degree until none remains. Deterministic (ascending scan, restart after
// each move); works for real weights.
template <typename W>
Cut stable_half_max_cut(const WeightedGraph<W>& g) {
    Cut s(g.n());
    auto deg = crossing_degrees(g, s);
    long safety = 4 * static_cast<long>(g.n()) * std::max(1, g.edge_count()) + 1000000;
    for (;;) {
        bool moved = false;
        for (int v = 0; v < g.n(); ++v) {
            W gain = g.degree(v) - deg[v] - deg[v]; // d(v) - 2 d_S(v)
            bool improves;
            if constexpr (std::is_integral_v<W>)
                improves = gain > 0;
            else
                improves = gain > 1e-12 * std::max<W>(1, g.max_degree());
            if (improves) {
                s.toggle(v);
                deg = crossing_degrees(g, s);
                moved = true;
                if (--safety < 0) throw NumericalError("stable_half_max_cut failed to converge");
                break;
            }
        }
        if (!moved) return s;
    }
}

// A deterministic Max-Cut solver with a declared approximation ratio.
struct MaxCutOracle {
    std::string name;
    double ratio = 1.0; // alpha in (0,1]
    std::function<Cut(const RealGraph&)> solve;
};

inline MaxCutOracle exact_max_cut_oracle(int cap = 26) {
    return {"exact", 1.0,
            [cap](const RealGraph& g) { return exact_max_cut(g, cap).cut; }};
}

inline MaxCutOracle stable_half_max_cut_oracle() {
    return {"stable-half", 0.5, [](const RealGraph& g) { return stable_half_max_cut(g); }};
}

struct MaxMinCut {
    Cut cut;
    Weight value = 0;
};

// A deterministic Simultaneous Max-Cut solver. Either entry point may be
// absent: `max_min` returns the exact max-min cut, `threshold` answers the
// feasibility question "is there a cut of value >= c in every instance"
// with a cut of value >= ratio*c in every instance.
struct SimultaneousMaxCutOracle {
    std::string name;
    double ratio = 1.0;
    std::function<MaxMinCut(std::span<const Graph>)> max_min;
    std::function<std::optional<Cut>(std::span<const Graph>, Weight)> threshold;
};

inline SimultaneousMaxCutOracle exact_smc_oracle(int cap = 26) {
    SimultaneousMaxCutOracle o;
    o.name = "exact";
    o.ratio = 1.0;
    o.max_min = [cap](std::span<const Graph> graphs) {
        auto r = exact_simultaneous_max_cut(graphs, cap);
        return MaxMinCut{r.cut, r.value};
    };
    o.threshold = [cap](std::span<const Graph> graphs, Weight c) -> std::optional<Cut> {
        auto r = exact_simultaneous_max_cut(graphs, cap);
        if (r.value >= c) return r.cut;
        return std::nullopt;
    };
    return o;
}

// Same solver exposed through the threshold interface only; exercises the
// binary-search wrapper an SDP-based oracle would go through.
inline SimultaneousMaxCutOracle threshold_only_smc_oracle(int cap = 26) {
    auto o = exact_smc_oracle(cap);
    o.name = "exact-threshold";
    o.max_min = nullptr;
    return o;
}

// --- exact k-OFTcut via the configuration LP ----------------------------

struct OftcutExact {
    CutDistribution distribution;
    double value = 0; // optimal mu*
};

// Builds the configuration LP with one probability variable per cut of G and
// one adversary constraint per fault set, then solves it with the simplex.
//
//   max sum_S P_S C_S - Z
//   s.t. sum_S P_S d_S(F) <= Z            for all F in binom(V,k)
//        sum_S P_S <= 1,  P >= 0
//
// The mass constraint stays an inequality, matching the LP as stated; Z's
// implicit nonnegativity is enforced as a bound (any F row makes Z >= 0).
inline OftcutExact exact_oftcut_value(const Graph& g, int k, int cap = 14,
                                      double support_tol = 1e-9) {
    detail::check_enumeration_cap(g.n(), cap, "exact_oftcut_value");
    if (k < 0 || k > g.n()) throw ValidationError("exact_oftcut_value: fault budget out of range");
    if (k > 4) throw ValidationError("exact_oftcut_value: fault budget above enumeration cap");
    const int n = g.n();
    const std::int64_t num_cuts = std::int64_t{1} << n;
    const std::int64_t num_faults = combination_count(n, k);
    if (num_cuts * num_faults > 32'000'000)
        throw ValidationError("exact_oftcut_value: LP size above cap");

    // Per-cut crossing data.
    std::vector<double> cut_vals(num_cuts, 0.0);
    detail::PhiScratch<Weight> scratch;
    std::vector<std::vector<double>> fault_rows(num_faults,
                                                std::vector<double>(num_cuts, 0.0));
    std::vector<std::vector<int>> fault_sets;
    fault_sets.reserve(num_faults);
    for_each_combination(n, k, [&](const std::vector<int>& ids) { fault_sets.push_back(ids); });

    for (std::int64_t mask = 0; mask < num_cuts; ++mask) {
        Weight value = 0;
        for (const auto& e : g.edges())
            if (((static_cast<std::uint64_t>(mask) >> e.u) ^
                 (static_cast<std::uint64_t>(mask) >> e.v)) & 1u)
                value += e.w;
        cut_vals[mask] = static_cast<double>(value);
        scratch.fill(g, static_cast<std::uint64_t>(mask));
        for (std::int64_t fi = 0; fi < num_faults; ++fi)
            fault_rows[fi][mask] = static_cast<double>(scratch.fault_crossing(fault_sets[fi]));
    }

    const int nvars = static_cast<int>(num_cuts) + 1; // P_S ..., Z last
    LinearProgram lp = LinearProgram::make(Objective::Maximize, nvars);
    for (std::int64_t s = 0; s < num_cuts; ++s) lp.objective[s] = cut_vals[s];
    lp.objective[nvars - 1] = -1.0;
    for (std::int64_t fi = 0; fi < num_faults; ++fi) {
        Eigen::VectorXd row = Eigen::VectorXd::Zero(nvars);
        for (std::int64_t s = 0; s < num_cuts; ++s) row[s] = fault_rows[fi][s];
        row[nvars - 1] = -1.0;
        lp.add_row(std::move(row), Sense::LessEq, 0.0);
    }
    Eigen::VectorXd mass = Eigen::VectorXd::Zero(nvars);
    mass.head(num_cuts).setOnes();
    lp.add_row(std::move(mass), Sense::LessEq, 1.0);

    auto sol = simplex_solve(lp);
    if (!sol.optimal()) throw NumericalError("exact_oftcut_value: LP solve failed");

    std::vector<std::pair<Cut, double>> support;
    for (std::int64_t s = 0; s < num_cuts; ++s)
        if (sol.x[s] > support_tol)
            support.push_back({Cut::from_mask(n, static_cast<std::uint64_t>(s)), sol.x[s]});
    return {CutDistribution(std::move(support)), sol.objective};
}

} // namespace ftcut
