// Finite-support distribution over cuts; the oblivious algorithm's output.
#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "ftcut/graph.hpp"

namespace ftcut {

class CutDistribution {
public:
    CutDistribution() = default;

    explicit CutDistribution(std::vector<std::pair<Cut, double>> support)
        : support_(std::move(support)) {
        double mass = 0;
        for (const auto& [cut, p] : support_) {
            if (!(p >= 0) || !std::isfinite(p))
                throw ValidationError("distribution probability negative or non-finite");
            mass += p;
        }
        if (mass > 1 + 1e-9) throw ValidationError("distribution mass exceeds 1");
        mass_ = mass;
    }

    const std::vector<std::pair<Cut, double>>& support() const { return support_; }
    double mass() const { return mass_; }
    bool empty() const { return support_.empty(); }

private:
    std::vector<std::pair<Cut, double>> support_;
    double mass_ = 0;
};

// mu(D,k,G) = min_F E_{S~D}[C_{S-F,G-F}]; the deterministic adversary picks
// the fault set with the largest expected crossing degree. Missing mass (when
// the support sums below 1) contributes zero, matching the LP formulation.
struct DistributionFt {
    double value = 0;
    FaultSet worst;
};

template <typename W>
DistributionFt distribution_ft_value_witness(const WeightedGraph<W>& g,
                                             const CutDistribution& d, int k) {
    if (k < 0 || k > g.n()) throw ValidationError("fault budget out of range");
    double base = 0;
    for (const auto& [cut, p] : d.support()) base += p * static_cast<double>(cut_value(g, cut));
    double best = 0;
    std::vector<int> best_f;
    bool first = true;
    for_each_combination(g.n(), k, [&](const std::vector<int>& ids) {
        FaultSet f(ids);
        double removed = 0;
        for (const auto& [cut, p] : d.support())
            removed += p * static_cast<double>(crossing_degree(g, cut, f));
        double after = base - removed;
        if (first || after < best) {
            best = after;
            best_f = ids;
            first = false;
        }
    });
    if (first) best = base; // k == 0
    return {best, FaultSet(std::move(best_f))};
}

template <typename W>
double distribution_ft_value(const WeightedGraph<W>& g, const CutDistribution& d, int k) {
    return distribution_ft_value_witness(g, d, k).value;
}

} // namespace ftcut
