// The k-fault approximation pipeline against an adaptive adversary: greedy
// heavy-vertex selection, the simultaneous-max-cut step over all heavy
// failures, the shallow test, and the residual-graph recomputation.
//
// Every threshold here ((eps*alpha/k)*sigma, 3k^2/eps, the super-heavy test,
// the residual branch guard) is evaluated in exact rational arithmetic with
// alpha represented as 878/1000, so no strict inequality can flip under
// floating-point rounding.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftcut/graph.hpp"
#include "ftcut/oracles.hpp"
#include "ftcut/rational.hpp"

namespace ftcut {

struct HeavyReport {
    std::vector<int> heavy;        // H, top-k then greedily appended
    std::vector<int> degree_order; // v_1..v_n: non-increasing degree, ties by id
    std::vector<Rat> sigma_trace;  // sigma_0 .. sigma_t
    int iterations = 0;            // t
};

// Greedy heavy-vertex selection: take the top-k vertices by degree, then keep
// appending the next vertex while d(v_{k+i}) > (eps*alpha/k)*sigma and
// d(v_{k+i}) > 3k, accumulating sigma += (d(v_{k+i}) - 3k)/4.
inline HeavyReport heavy_vertices(const Graph& g, int k, const Rat& eps) {
    if (!g.is_unweighted()) throw ValidationError("heavy_vertices: weighted input rejected");
    if (k < 1) throw ValidationError("heavy_vertices: fault budget must be >= 1");
    if (g.n() < k) throw ValidationError("heavy_vertices: fewer vertices than faults");
    if (!(Rat(0) < eps && eps < Rat(1)))
        throw ValidationError("heavy_vertices: eps must lie in (0,1)");

    HeavyReport report;
    report.degree_order.resize(g.n());
    std::iota(report.degree_order.begin(), report.degree_order.end(), 0);
    std::sort(report.degree_order.begin(), report.degree_order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    report.heavy.assign(report.degree_order.begin(), report.degree_order.begin() + k);
    Rat sigma(0);
    report.sigma_trace.push_back(sigma);
    const Rat step_factor = eps * kAlphaSmc / Rat(k);
    int i = 1;
    while (k + i <= g.n()) {
        int v = report.degree_order[k + i - 1];
        Weight d = g.degree(v);
        if (!(Rat(d) > step_factor * sigma) || !(d > 3 * static_cast<Weight>(k))) break;
        sigma = sigma + Rat(d - 3 * k, 4);
        report.heavy.push_back(v);
        report.sigma_trace.push_back(sigma);
        ++i;
    }
    report.iterations = i - 1;
    return report;
}

// C_{S - k x H} = min over F in binom(H,k) of C_S - d_S(F).
inline Weight cut_minus_heavy(const Graph& g, const Cut& s, std::span<const int> heavy, int k) {
    if (static_cast<int>(heavy.size()) < k)
        throw ValidationError("cut_minus_heavy: heavy set smaller than fault budget");
    std::vector<int> h(heavy.begin(), heavy.end());
    std::sort(h.begin(), h.end());
    const Weight c = cut_value(g, s);
    Weight worst_removed = 0;
    for_each_combination(static_cast<int>(h.size()), k, [&](const std::vector<int>& pick) {
        std::vector<int> f(pick.size());
        for (std::size_t i = 0; i < pick.size(); ++i) f[i] = h[pick[i]];
        Weight d = crossing_degree(g, s, FaultSet(std::move(f)));
        if (d > worst_removed) worst_removed = d;
    });
    return c - worst_removed;
}

// Simultaneous Max-Cut wrapper. With an exact max-min oracle the answer is
// direct; a threshold-feasibility oracle is driven by binary search on the
// common threshold c over [0, max_i W_i] to precision 1 (integer weights),
// returning the cut from the highest feasible threshold.
inline Cut simultaneous_mc(std::span<const Graph> graphs, const SimultaneousMaxCutOracle& oracle) {
    if (graphs.empty()) throw ValidationError("simultaneous_mc: no instances");
    const int n = graphs.front().n();
    for (const auto& g : graphs)
        if (g.n() != n) throw ValidationError("simultaneous_mc: mismatched vertex sets");
    if (oracle.max_min) return oracle.max_min(graphs).cut;
    if (!oracle.threshold)
        throw ValidationError("simultaneous_mc: oracle exposes no entry point");

    Weight max_w = 0;
    for (const auto& g : graphs) max_w = std::max(max_w, g.total_weight());
    auto base = oracle.threshold(graphs, 0);
    if (!base) throw NumericalError("simultaneous_mc: oracle rejected the trivial threshold");
    Cut best = *base;
    Weight lo = 0, hi = max_w + 1;
    while (lo + 1 < hi) {
        Weight mid = lo + (hi - lo) / 2;
        if (auto cut = oracle.threshold(graphs, mid)) {
            best = *cut;
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return best;
}

struct SuperHeavyReport {
    std::vector<int> super_heavy; // X
    Graph residual;               // G_R: X's edges removed, vertex set kept
    Weight residual_edges = 0;    // m_R
    int residual_vertices = 0;    // n_R: non-isolated vertices of G_R
    Rat ell{0};                   // degree bound for V - X
};

// X = {v : (d(v)-3k)/2 > c_heavy/alpha}, G_R = G - X, ell = 6k^2/(alpha eps) + 3k.
inline SuperHeavyReport compute_super_heavy(const Graph& g, int k, const Rat& eps,
                                            Weight c_heavy) {
    SuperHeavyReport report;
    for (int v = 0; v < g.n(); ++v)
        if (Rat(g.degree(v) - 3 * static_cast<Weight>(k), 2) > Rat(c_heavy) / kAlphaSmc)
            report.super_heavy.push_back(v);
    report.residual = masked_graph(g, FaultSet(report.super_heavy));
    report.residual_edges = report.residual.total_weight();
    for (int v = 0; v < g.n(); ++v)
        if (!report.residual.incident(v).empty()) ++report.residual_vertices;
    report.ell = Rat(6 * static_cast<std::int64_t>(k) * k) / (kAlphaSmc * eps) + Rat(3 * k);
    return report;
}

enum class KFaultBranch { NotShallow, ShallowBruteForce, ShallowOracle };

inline const char* kfault_branch_name(KFaultBranch b) {
    switch (b) {
        case KFaultBranch::NotShallow: return "not-shallow";
        case KFaultBranch::ShallowBruteForce: return "shallow-brute-force";
        case KFaultBranch::ShallowOracle: return "shallow-oracle";
    }
    return "?";
}

struct ShallowResult {
    Cut cut;
    SuperHeavyReport super;
    KFaultBranch branch = KFaultBranch::ShallowBruteForce;
};

// Recomputes the cut in the shallow case. Removes the super-heavy set X, then
// either enumerates all cuts of the non-isolated residual vertices (selecting
// the best (k-|X|)-fault value in G_R) or takes the max-cut oracle's cut on
// G_R. X vertices start outside the cut; the final loop applies k-greedy
// moves restricted to X until none applies.
inline ShallowResult shallow_ft_cut(const Graph& g, std::span<const int> heavy,
                                    const Cut& smc_cut, int k, const Rat& eps,
                                    const MaxCutOracle& maxcut_oracle, int enum_cap = 26) {
    const Weight c_heavy = cut_minus_heavy(g, smc_cut, heavy, k);
    Weight light_max = 0;
    {
        std::vector<bool> in_heavy(g.n(), false);
        for (int v : heavy) in_heavy[v] = true;
        for (int v = 0; v < g.n(); ++v)
            if (!in_heavy[v]) light_max = std::max(light_max, g.degree(v));
    }
    if (light_max > 3 * static_cast<Weight>(k) || !(Rat(c_heavy) * eps < Rat(3 * k * k)))
        throw std::logic_error("shallow_ft_cut: called outside the shallow case");

    ShallowResult result;
    result.super = compute_super_heavy(g, k, eps, c_heavy);
    const auto& x = result.super.super_heavy;
    if (static_cast<int>(x.size()) > k)
        throw std::logic_error("shallow_ft_cut: super-heavy set larger than the fault budget");
    const int residual_budget = k - static_cast<int>(x.size());
    const Graph& gr = result.super.residual;

    const Rat branch_bound = Rat(2 * k) * result.super.ell / (kAlphaSmc * eps);
    Cut best(g.n());
    if (Rat(result.super.residual_edges) < branch_bound) {
        result.branch = KFaultBranch::ShallowBruteForce;
        std::vector<int> live;
        for (int v = 0; v < g.n(); ++v)
            if (!gr.incident(v).empty()) live.push_back(v);
        if (static_cast<int>(live.size()) > enum_cap)
            throw ValidationError("shallow_ft_cut: residual vertex count above enumeration cap");
        Weight best_phi = 0;
        bool first = true;
        const std::uint64_t count = std::uint64_t{1} << live.size();
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            Cut candidate(g.n());
            for (std::size_t i = 0; i < live.size(); ++i)
                if ((mask >> i) & 1u) candidate.set(live[i], true);
            Weight phi = ft_value(gr, candidate, residual_budget);
            if (first || phi > best_phi) {
                best_phi = phi;
                best = candidate;
                first = false;
            }
        }
    } else {
        result.branch = KFaultBranch::ShallowOracle;
        best = maxcut_oracle.solve(convert_weights<double>(gr));
        // Isolated residual vertices (X included) sit outside the cut.
        for (int v = 0; v < g.n(); ++v)
            if (gr.incident(v).empty()) best.set(v, false);
    }

    // k-greedy moves restricted to X, in the full graph.
    auto deg = crossing_degrees(g, best);
    for (;;) {
        bool moved = false;
        for (int v : x) {
            if (2 * deg[v] <= g.degree(v) - k) {
                best.toggle(v);
                deg = crossing_degrees(g, best);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    result.cut = best;
    return result;
}

struct KFaultReport {
    HeavyReport heavy;
    Cut smc_cut;
    Weight c_heavy = 0;          // C_{smc_cut - k x H}
    Weight light_max_degree = 0; // max degree over V - H
    bool shallow = false;
    KFaultBranch branch = KFaultBranch::NotShallow;
    std::vector<int> super_heavy;
    Cut cut;
    Weight phi = 0;
};

// Main driver: heavy vertices, simultaneous max-cut over all heavy failures,
// then the shallow recomputation when needed.
inline KFaultReport aftcut_k_approx(const Graph& g, int k, const Rat& eps,
                                    const SimultaneousMaxCutOracle& smc_oracle,
                                    const MaxCutOracle& maxcut_oracle, int enum_cap = 26) {
    KFaultReport report;
    report.heavy = heavy_vertices(g, k, eps);

    std::vector<int> h_sorted = report.heavy.heavy;
    std::sort(h_sorted.begin(), h_sorted.end());
    std::vector<Graph> instances;
    instances.reserve(combination_count(static_cast<int>(h_sorted.size()), k));
    for_each_combination(static_cast<int>(h_sorted.size()), k, [&](const std::vector<int>& pick) {
        std::vector<int> f(pick.size());
        for (std::size_t i = 0; i < pick.size(); ++i) f[i] = h_sorted[pick[i]];
        instances.push_back(masked_graph(g, FaultSet(std::move(f))));
    });

    report.smc_cut = simultaneous_mc(instances, smc_oracle);
    report.c_heavy = cut_minus_heavy(g, report.smc_cut, report.heavy.heavy, k);
    {
        std::vector<bool> in_heavy(g.n(), false);
        for (int v : report.heavy.heavy) in_heavy[v] = true;
        for (int v = 0; v < g.n(); ++v)
            if (!in_heavy[v]) report.light_max_degree = std::max(report.light_max_degree, g.degree(v));
    }
    report.shallow = report.light_max_degree <= 3 * static_cast<Weight>(k) &&
                     Rat(report.c_heavy) * eps < Rat(3 * k * k);

    if (!report.shallow) {
        report.branch = KFaultBranch::NotShallow;
        report.cut = report.smc_cut;
    } else {
        auto shallow = shallow_ft_cut(g, report.heavy.heavy, report.smc_cut, k, eps,
                                      maxcut_oracle, enum_cap);
        report.branch = shallow.branch;
        report.super_heavy = shallow.super.super_heavy;
        report.cut = shallow.cut;
    }
    report.phi = ft_value(g, report.cut, k);
    return report;
}

} // namespace ftcut
