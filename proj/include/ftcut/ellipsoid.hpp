// Central-cut ellipsoid feasibility search over a separation callback.
//
// The callback decides membership: it returns nothing when the query point is
// acceptable, or a violated halfspace a.x <= b that contains the feasible
// region while the query point has a.x > b. The search keeps a query log of
// every violated constraint returned; for the oblivious pipeline this log is
// the set of queried cuts that seeds the reduced primal.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "ftcut/errors.hpp"

namespace ftcut {

struct Halfspace {
    Eigen::VectorXd normal; // a
    double offset = 0;      // b, region satisfies a.x <= b
};

using SeparationCallback = std::function<std::optional<Halfspace>(const Eigen::VectorXd&)>;

struct EllipsoidConfig {
    double radius = 1.0;            // R: the region lies in the R-ball around center
    double target_precision = 1e-9; // eps_vol: smallest certifiable ball radius
    int max_iterations = 0;         // 0 -> ceil(2 d (d+1) ln(R/eps_vol))
    double slack = 1e-7;            // feasibility slack tau for callers' constraint checks
    Eigen::VectorXd center;         // empty -> origin

    void validate() const {
        if (!(radius > target_precision) || !(target_precision > 0))
            throw ValidationError("ellipsoid config requires R > eps_vol > 0");
    }
};

struct EllipsoidResult {
    bool feasible = false;
    Eigen::VectorXd point;            // accepted point when feasible
    std::vector<Halfspace> query_log; // every violated constraint returned
    int iterations = 0;
};

inline EllipsoidResult ellipsoid_feasibility(int dim, const SeparationCallback& separate,
                                             const EllipsoidConfig& cfg) {
    cfg.validate();
    if (dim <= 0) throw ValidationError("ellipsoid dimension must be positive");
    const double d = dim;
    int max_iter = cfg.max_iterations;
    if (max_iter <= 0)
        max_iter = static_cast<int>(
            std::ceil(2.0 * d * (d + 1.0) * std::log(cfg.radius / cfg.target_precision))) + 1;

    Eigen::VectorXd x = cfg.center.size() == dim ? cfg.center : Eigen::VectorXd::Zero(dim);
    Eigen::MatrixXd shape = Eigen::MatrixXd::Identity(dim, dim) * (cfg.radius * cfg.radius);

    EllipsoidResult res;
    for (int it = 0; it < max_iter; ++it) {
        res.iterations = it + 1;
        auto violated = separate(x);
        if (!violated) {
            res.feasible = true;
            res.point = x;
            return res;
        }
        if (violated->normal.size() != dim)
            throw ValidationError("separation callback returned wrong-dimension normal");
        res.query_log.push_back(*violated);
        const Eigen::VectorXd& a = violated->normal;

        if (dim == 1) {
            // Interval halving; the general update degenerates at d = 1.
            double r = std::sqrt(shape(0, 0));
            x[0] -= (a[0] > 0 ? 1.0 : -1.0) * r / 2.0;
            shape(0, 0) = r * r / 4.0;
            continue;
        }

        Eigen::VectorXd pa = shape * a;
        double quad = a.dot(pa);
        if (std::isnan(quad)) throw NumericalError("ellipsoid conditioning collapsed");
        // Extent along the violated normal below the target resolution: the
        // enclosed region is empty at this precision.
        double scale = a.norm() * cfg.target_precision;
        if (quad <= scale * scale) {
            res.feasible = false;
            return res;
        }
        double norm = std::sqrt(quad);
        Eigen::VectorXd g = pa / norm;
        x -= g / (d + 1.0);
        shape = (d * d / (d * d - 1.0)) * (shape - (2.0 / (d + 1.0)) * (g * g.transpose()));
        shape = ((shape + shape.transpose()) / 2.0).eval(); // re-symmetrize each step
    }
    res.feasible = false;
    return res;
}

} // namespace ftcut
