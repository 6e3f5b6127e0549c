// The oblivious-adversary pipeline: dual reweighting, the approximate
// separation oracle, binary search over the dual objective with an ellipsoid
// feasibility search inside each stage, and the reduced primal rebuilt from
// the queried cuts.
//
// With an exact max-cut oracle (ratio 1) this is an exact method up to the
// binary-search precision; the oracle interface keeps the structure needed to
// plug in an approximate solver, whose declared ratio alpha widens the
// certified bracket to [Y - eps_Y, Y/alpha].
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ftcut/distribution.hpp"
#include "ftcut/ellipsoid.hpp"
#include "ftcut/graph.hpp"
#include "ftcut/lp.hpp"
#include "ftcut/oracles.hpp"

namespace ftcut {

// binom(V,k) in lexicographic order; the index of a fault set in this list is
// its dual-variable index.
inline std::vector<FaultSet> all_fault_sets(int n, int k) {
    std::vector<FaultSet> out;
    out.reserve(combination_count(n, k));
    for_each_combination(n, k, [&](const std::vector<int>& ids) { out.emplace_back(ids); });
    return out;
}

// The adversary's dual point: one weight per fault set (per vertex for k=1)
// plus the objective value Y.
struct DualAssignment {
    Eigen::VectorXd x;
    double y = 0;
};

// Reweights every edge by (1 - sum of X over fault sets hitting it). Under
// sum X <= 1 and X >= 0 the result is nonnegative; values within `tol` below
// zero (ellipsoid iterates) are clamped to 0, anything lower is a contract
// breach and aborts.
template <typename W>
RealGraph dual_weights(const WeightedGraph<W>& g, std::span<const FaultSet> fault_sets,
                       const Eigen::VectorXd& x, double tol = 1e-6) {
    if (x.size() != static_cast<Eigen::Index>(fault_sets.size()))
        throw ValidationError("dual_weights: assignment length mismatch");
    std::vector<double> hit(g.edge_count(), 0.0);
    for (std::size_t fi = 0; fi < fault_sets.size(); ++fi) {
        const double xf = x[static_cast<Eigen::Index>(fi)];
        if (xf == 0) continue;
        for (int i = 0; i < g.edge_count(); ++i) {
            const auto& e = g.edge(i);
            if (fault_sets[fi].contains(e.u) || fault_sets[fi].contains(e.v)) hit[i] += xf;
        }
    }
    std::vector<WeightedEdge<double>> edges;
    edges.reserve(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        double w = (1.0 - hit[i]) * static_cast<double>(e.w);
        if (w < 0) {
            if (w < -tol * std::max<double>(1.0, static_cast<double>(e.w)))
                throw NumericalError("dual_weights: reweighted edge genuinely negative");
            w = 0;
        }
        edges.push_back({e.u, e.v, w});
    }
    return RealGraph(g.n(), std::move(edges));
}

struct SeparationResult {
    enum class Kind { Feasible, ViolatedMass, ViolatedCut };
    Kind kind = Kind::Feasible;
    Cut cut;                   // valid for ViolatedCut
    double cut_value_dual = 0; // C_{S,G'} of that cut (linear form in X)
};

// Approximate separation oracle for the dual: reject when the X mass exceeds
// one, otherwise test the oracle's max cut of the reweighted graph against Y.
// Contract: a feasible assignment is always accepted, and any accepted
// assignment is feasible once Y is relaxed to Y/ratio.
template <typename W>
SeparationResult separation_oracle(const WeightedGraph<W>& g,
                                   std::span<const FaultSet> fault_sets,
                                   const Eigen::VectorXd& x, double y,
                                   const MaxCutOracle& oracle) {
    double mass = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) mass += x[i];
    if (mass > 1.0) return {SeparationResult::Kind::ViolatedMass, Cut(g.n()), 0.0};

    RealGraph reweighted = dual_weights(g, fault_sets, x);
    Cut s = oracle.solve(reweighted);
    // Evaluate the dual constraint in its linear form (original weights minus
    // the crossing degrees), so the test matches the halfspace handed back to
    // the ellipsoid even when clamping touched the graph.
    double value = static_cast<double>(cut_value(g, s));
    for (std::size_t fi = 0; fi < fault_sets.size(); ++fi) {
        double xf = x[static_cast<Eigen::Index>(fi)];
        if (xf != 0) value -= xf * static_cast<double>(crossing_degree(g, s, fault_sets[fi]));
    }
    if (value > y) return {SeparationResult::Kind::ViolatedCut, s, value};
    return {SeparationResult::Kind::Feasible, Cut(g.n()), value};
}

template <typename W>
SeparationResult separation_oracle(const WeightedGraph<W>& g, const Eigen::VectorXd& x,
                                   double y, int k, const MaxCutOracle& oracle) {
    auto fs = all_fault_sets(g.n(), k);
    return separation_oracle(g, std::span<const FaultSet>(fs), x, y, oracle);
}

template <typename W>
SeparationResult separation_oracle(const WeightedGraph<W>& g, const DualAssignment& dual,
                                   int k, const MaxCutOracle& oracle) {
    return separation_oracle(g, dual.x, dual.y, k, oracle);
}

struct OftcutSolution {
    CutDistribution distribution;
    double value = 0;         // objective of the reduced primal
    double reported_y = 0;    // smallest oracle-feasible Y found
    double lower_bound = 0;   // certified: lower_bound <= mu* <= upper_bound
    double upper_bound = 0;
    std::vector<Cut> queried_cuts; // H, in first-query order
    FaultSet adversary_best;       // worst fault set against the distribution
    double distribution_value = 0; // mu(distribution, k)
};

struct OftcutParams {
    double eps_y = 1e-4;              // binary-search precision on Y
    double ellipsoid_precision = 1e-9;
    double slack = 1e-7;              // tau
    int dual_dim_cap = 4096;          // binom(n,k) must fit
    double support_tol = 1e-9;
};

// Full pipeline for the k-fault oblivious value.
inline OftcutSolution solve_oftcut(const Graph& g, int k, const MaxCutOracle& oracle,
                                   const OftcutParams& params = {}) {
    if (k < 0 || k > g.n()) throw ValidationError("solve_oftcut: fault budget out of range");
    if (!(params.eps_y > 0)) throw ValidationError("solve_oftcut: eps_y must be positive");
    const std::int64_t dim64 = combination_count(g.n(), k);
    if (dim64 > params.dual_dim_cap)
        throw ValidationError("solve_oftcut: dual dimension above cap");
    const int dim = static_cast<int>(dim64);
    const double total = static_cast<double>(g.total_weight());

    OftcutSolution out;
    if (g.edge_count() == 0 || dim == 0) {
        out.adversary_best = dim > 0 ? all_fault_sets(g.n(), k).front() : FaultSet{};
        return out; // trivial distribution, value 0
    }

    const auto fault_sets = all_fault_sets(g.n(), k);

    // H accumulates every violated cut the oracle ever returns, across all
    // binary-search stages; duplicates are dropped, first-query order kept.
    std::vector<Cut> queried;
    std::set<std::vector<int>> seen;
    auto record = [&](const Cut& s) {
        auto key = s.members();
        if (seen.insert(key).second) queried.push_back(s);
    };

    EllipsoidConfig cfg;
    cfg.radius = 2.0; // the dual region sits inside the unit simplex
    cfg.target_precision = params.ellipsoid_precision;
    cfg.slack = params.slack;

    auto stage_feasible = [&](double y) -> bool {
        SeparationCallback cb = [&](const Eigen::VectorXd& x) -> std::optional<Halfspace> {
            for (int j = 0; j < dim; ++j) {
                if (x[j] < -params.slack) {
                    Eigen::VectorXd a = Eigen::VectorXd::Zero(dim);
                    a[j] = -1;
                    return Halfspace{std::move(a), 0.0};
                }
            }
            // Negatives within the slack are clamped away; that only lowers
            // the reweighted cut values, so a violation found here is also a
            // violation at the unclamped center.
            Eigen::VectorXd x_eval = x.cwiseMax(0.0);
            auto sep = separation_oracle(g, std::span<const FaultSet>(fault_sets), x_eval, y,
                                         oracle);
            if (sep.kind == SeparationResult::Kind::ViolatedMass)
                return Halfspace{Eigen::VectorXd::Ones(dim), 1.0};
            if (sep.kind == SeparationResult::Kind::ViolatedCut) {
                record(sep.cut);
                Eigen::VectorXd a(dim);
                for (int j = 0; j < dim; ++j)
                    a[j] = -static_cast<double>(crossing_degree(g, sep.cut, fault_sets[j]));
                return Halfspace{std::move(a),
                                 y - static_cast<double>(cut_value(g, sep.cut))};
            }
            return std::nullopt;
        };
        return ellipsoid_feasibility(dim, cb, cfg).feasible;
    };

    // The search runs at half the requested precision so the certified bounds
    // absorb the ellipsoid's own resolution.
    const double eps_search = params.eps_y / 2;
    double y_final;
    if (stage_feasible(0.0)) {
        y_final = 0.0;
    } else {
        double lo = 0.0, hi = total;
        if (!stage_feasible(hi))
            throw NumericalError("solve_oftcut: Y = total weight should always be feasible");
        while (hi - lo > eps_search) {
            double mid = (lo + hi) / 2;
            if (stage_feasible(mid))
                hi = mid;
            else
                lo = mid;
        }
        y_final = hi;
    }

    out.reported_y = y_final;
    out.lower_bound = std::max(0.0, y_final - params.eps_y);
    out.upper_bound = y_final / oracle.ratio;
    out.queried_cuts = queried;

    // Reduced primal over the queried cuts.
    if (!queried.empty()) {
        const int ncols = static_cast<int>(queried.size());
        LinearProgram lp = LinearProgram::make(Objective::Maximize, ncols + 1);
        for (int s = 0; s < ncols; ++s)
            lp.objective[s] = static_cast<double>(cut_value(g, queried[s]));
        lp.objective[ncols] = -1.0; // Z
        for (int fi = 0; fi < dim; ++fi) {
            Eigen::VectorXd row = Eigen::VectorXd::Zero(ncols + 1);
            for (int s = 0; s < ncols; ++s)
                row[s] = static_cast<double>(crossing_degree(g, queried[s], fault_sets[fi]));
            row[ncols] = -1.0;
            lp.add_row(std::move(row), Sense::LessEq, 0.0);
        }
        Eigen::VectorXd mass = Eigen::VectorXd::Zero(ncols + 1);
        mass.head(ncols).setOnes();
        lp.add_row(std::move(mass), Sense::LessEq, 1.0);
        auto sol = simplex_solve(lp);
        if (!sol.optimal()) throw NumericalError("solve_oftcut: reduced primal solve failed");
        out.value = sol.objective;
        std::vector<std::pair<Cut, double>> support;
        for (int s = 0; s < ncols; ++s)
            if (sol.x[s] > params.support_tol) support.push_back({queried[s], sol.x[s]});
        out.distribution = CutDistribution(std::move(support));
    }

    auto ft = distribution_ft_value_witness(g, out.distribution, k);
    out.distribution_value = ft.value;
    out.adversary_best = ft.worst;
    return out;
}

} // namespace ftcut
