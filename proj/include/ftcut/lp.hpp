// Dense two-phase simplex with Bland's anti-cycling rule.
//
// Desk-scale correctness is the goal, not large-scale performance: the whole
// tableau is an Eigen matrix and every pivot is a rank-one row update. Handles
// max/min objectives, <= / = / >= rows, and per-variable bounds (finite lower,
// optional upper, fully free variables are split).
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ftcut/errors.hpp"

namespace ftcut {

enum class Sense { LessEq, Equal, GreaterEq };
enum class Objective { Maximize, Minimize };

struct ConstraintRow {
    Eigen::VectorXd coeffs;
    Sense sense = Sense::LessEq;
    double rhs = 0;
};

struct LinearProgram {
    Objective direction = Objective::Maximize;
    Eigen::VectorXd objective;
    std::vector<ConstraintRow> rows;
    Eigen::VectorXd lower; // -inf allowed
    Eigen::VectorXd upper; // +inf allowed

    static LinearProgram make(Objective dir, int nvars) {
        LinearProgram lp;
        lp.direction = dir;
        lp.objective = Eigen::VectorXd::Zero(nvars);
        lp.lower = Eigen::VectorXd::Zero(nvars);
        lp.upper = Eigen::VectorXd::Constant(nvars, std::numeric_limits<double>::infinity());
        return lp;
    }

    int num_vars() const { return static_cast<int>(objective.size()); }

    void add_row(Eigen::VectorXd coeffs, Sense sense, double rhs) {
        if (coeffs.size() != objective.size())
            throw ValidationError("constraint row length does not match variable count");
        rows.push_back({std::move(coeffs), sense, rhs});
    }

    void validate() const {
        auto finite = [](double x) { return std::isfinite(x); };
        for (int j = 0; j < num_vars(); ++j) {
            if (!finite(objective[j])) throw ValidationError("non-finite objective coefficient");
            if (lower[j] > upper[j]) throw ValidationError("inconsistent variable bounds");
            if (std::isnan(lower[j]) || std::isnan(upper[j]))
                throw ValidationError("NaN variable bound");
        }
        for (const auto& r : rows) {
            if (r.coeffs.size() != objective.size())
                throw ValidationError("constraint row length does not match variable count");
            if (!finite(r.rhs)) throw ValidationError("non-finite rhs");
            for (int j = 0; j < r.coeffs.size(); ++j)
                if (!finite(r.coeffs[j])) throw ValidationError("non-finite constraint coefficient");
        }
    }
};

struct SimplexResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Eigen::VectorXd x;             // primal values (original variables)
    double objective = 0;          // in the original direction
    Eigen::VectorXd row_duals;     // per original row; see convention below
    Eigen::VectorXd reduced_costs; // per original variable

    bool optimal() const { return status == Status::Optimal; }
};

// Dual convention: for Maximize, a <= row has dual >= 0 and a >= row has
// dual <= 0 (flipped for Minimize); complementary slackness holds as
// dual_i * (rhs_i - a_i.x) ~ 0 and reduced_cost_j * (x_j - lower_j) ~ 0.
inline SimplexResult simplex_solve(const LinearProgram& lp) {
    lp.validate();
    constexpr double kPivotTol = 1e-9;
    const int n_orig = lp.num_vars();

    // Variable transforms to y >= 0: x = offset + scale*y (+ optionally -y2).
    struct VarMap {
        int col = -1;
        int neg_col = -1; // second column of a free split
        double scale = 1;
        double offset = 0;
    };
    std::vector<VarMap> vmap(n_orig);
    int cols = 0;
    std::vector<std::pair<int, double>> upper_rows; // (orig var, bound width) rows to add
    for (int j = 0; j < n_orig; ++j) {
        double lo = lp.lower[j], hi = lp.upper[j];
        if (std::isfinite(lo)) {
            vmap[j] = {cols++, -1, 1.0, lo};
            if (std::isfinite(hi)) upper_rows.push_back({j, hi - lo});
        } else if (std::isfinite(hi)) {
            vmap[j] = {cols++, -1, -1.0, hi}; // x = hi - y
        } else {
            vmap[j] = {cols, cols + 1, 1.0, 0.0}; // x = y+ - y-
            cols += 2;
        }
    }
    const int n_struct = cols;

    // Assemble rows in y-space with rhs >= 0.
    struct Row {
        Eigen::VectorXd a;
        Sense sense;
        double rhs;
        double flip = 1;   // -1 if the original row was negated
        int orig = -1;     // original row index, -1 for bound rows
    };
    std::vector<Row> rows;
    auto to_y = [&](const Eigen::VectorXd& coeffs, double rhs, Sense sense, int orig) {
        Row r;
        r.a = Eigen::VectorXd::Zero(n_struct);
        r.rhs = rhs;
        r.sense = sense;
        r.orig = orig;
        for (int j = 0; j < n_orig; ++j) {
            double c = coeffs[j];
            if (c == 0) continue;
            r.rhs -= c * vmap[j].offset;
            r.a[vmap[j].col] += c * vmap[j].scale;
            if (vmap[j].neg_col >= 0) r.a[vmap[j].neg_col] -= c;
        }
        if (r.rhs < 0) {
            r.a = -r.a;
            r.rhs = -r.rhs;
            r.flip = -1;
            if (r.sense == Sense::LessEq)
                r.sense = Sense::GreaterEq;
            else if (r.sense == Sense::GreaterEq)
                r.sense = Sense::LessEq;
        }
        rows.push_back(std::move(r));
    };
    for (int i = 0; i < static_cast<int>(lp.rows.size()); ++i)
        to_y(lp.rows[i].coeffs, lp.rows[i].rhs, lp.rows[i].sense, i);
    for (auto [j, width] : upper_rows) {
        Eigen::VectorXd unit = Eigen::VectorXd::Zero(n_orig);
        // Express x_j <= upper_j directly in x-space; to_y handles the shift.
        unit[j] = 1;
        to_y(unit, lp.upper[j], Sense::LessEq, -1);
    }

    const int m = static_cast<int>(rows.size());

    // Column layout: structural | slack/surplus | artificial | rhs.
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    int total = n_struct;
    for (int i = 0; i < m; ++i)
        if (rows[i].sense != Sense::Equal) slack_col[i] = total++;
    for (int i = 0; i < m; ++i)
        if (rows[i].sense != Sense::LessEq) art_col[i] = total++;
    const int n_art_first = total - std::count_if(rows.begin(), rows.end(), [](const Row& r) {
                                return r.sense != Sense::LessEq;
                            });

    Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m, total + 1);
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        tab.row(i).head(n_struct) = rows[i].a;
        tab(i, total) = rows[i].rhs;
        if (slack_col[i] >= 0) tab(i, slack_col[i]) = rows[i].sense == Sense::LessEq ? 1 : -1;
        if (art_col[i] >= 0) {
            tab(i, art_col[i]) = 1;
            basis[i] = art_col[i];
        } else {
            basis[i] = slack_col[i];
        }
    }

    // Phase-2 cost vector over y (minimization of the internal objective).
    const double obj_sign = lp.direction == Objective::Maximize ? -1.0 : 1.0;
    Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(total);
    double obj_const = 0;
    for (int j = 0; j < n_orig; ++j) {
        double c = obj_sign * lp.objective[j];
        obj_const += c * vmap[j].offset;
        cost2[vmap[j].col] += c * vmap[j].scale;
        if (vmap[j].neg_col >= 0) cost2[vmap[j].neg_col] -= c;
    }
    Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(total);
    for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) cost1[art_col[i]] = 1;

    // Reduced-cost rows, kept in sync with the tableau by the same pivots.
    auto reduced = [&](const Eigen::VectorXd& cost) {
        Eigen::VectorXd r(total + 1);
        r.head(total) = cost;
        r[total] = 0;
        for (int i = 0; i < m; ++i) {
            double cb = cost[basis[i]];
            if (cb != 0) r -= cb * tab.row(i).transpose();
        }
        return r;
    };
    Eigen::VectorXd red1 = reduced(cost1);
    Eigen::VectorXd red2 = reduced(cost2);

    auto pivot = [&](int row, int col) {
        double p = tab(row, col);
        if (std::abs(p) < kPivotTol) throw NumericalError("simplex pivot breakdown");
        tab.row(row) /= p;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            double f = tab(i, col);
            if (f != 0) tab.row(i) -= f * tab.row(row);
        }
        if (double f = red1[col]; f != 0) red1 -= f * tab.row(row).transpose();
        if (double f = red2[col]; f != 0) red2 -= f * tab.row(row).transpose();
        basis[row] = col;
    };

    // Bland: entering = lowest-index eligible column; leaving = min ratio with
    // lowest basis index on ties.
    auto run_phase = [&](Eigen::VectorXd& red, bool allow_artificial) -> bool {
        const int iter_cap = 50000 + 200 * (m + total);
        for (int iter = 0; iter < iter_cap; ++iter) {
            int enter = -1;
            for (int j = 0; j < total; ++j) {
                if (!allow_artificial && j >= n_art_first) break;
                if (red[j] < -kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            double best_ratio = 0;
            for (int i = 0; i < m; ++i) {
                double a = tab(i, enter);
                if (a <= kPivotTol) continue;
                double ratio = tab(i, total) / a;
                if (leave < 0 || ratio < best_ratio - 1e-12 ||
                    (std::abs(ratio - best_ratio) <= 1e-12 && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false; // unbounded direction
            pivot(leave, enter);
        }
        throw NumericalError("simplex iteration cap exceeded");
    };

    // Phase 1.
    if (std::any_of(art_col.begin(), art_col.end(), [](int c) { return c >= 0; })) {
        if (!run_phase(red1, true)) throw NumericalError("phase-1 unbounded");
        double infeasibility = -red1[total];
        if (infeasibility > 1e-7) {
            SimplexResult res;
            res.status = SimplexResult::Status::Infeasible;
            return res;
        }
        // Drive leftover artificials out of the basis where possible.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < n_art_first) continue;
            int col = -1;
            for (int j = 0; j < n_art_first; ++j)
                if (std::abs(tab(i, j)) > kPivotTol) {
                    col = j;
                    break;
                }
            if (col >= 0) pivot(i, col);
            // else: redundant row; the artificial stays basic at value 0 and
            // can never increase because its column is excluded from entering.
        }
    }

    // Phase 2.
    if (!run_phase(red2, false)) {
        SimplexResult res;
        res.status = SimplexResult::Status::Unbounded;
        return res;
    }

    // Recover x.
    Eigen::VectorXd y = Eigen::VectorXd::Zero(total);
    for (int i = 0; i < m; ++i) y[basis[i]] = tab(i, total);
    SimplexResult res;
    res.status = SimplexResult::Status::Optimal;
    res.x = Eigen::VectorXd::Zero(n_orig);
    for (int j = 0; j < n_orig; ++j) {
        double v = vmap[j].offset + vmap[j].scale * y[vmap[j].col];
        if (vmap[j].neg_col >= 0) v -= y[vmap[j].neg_col];
        res.x[j] = v;
    }
    res.objective = lp.objective.dot(res.x);

    // Duals from the reduced costs of each row's slack/artificial column,
    // mapped back through row flips and the objective sign.
    res.row_duals = Eigen::VectorXd::Zero(static_cast<int>(lp.rows.size()));
    for (int i = 0; i < m; ++i) {
        if (rows[i].orig < 0) continue;
        double pi;
        if (slack_col[i] >= 0) {
            double rc = red2[slack_col[i]];
            pi = rows[i].sense == Sense::LessEq ? -rc : rc;
        } else {
            pi = -red2[art_col[i]];
        }
        // pi is the dual of the internal min problem; undo the row flip and
        // the max->min negation (d obj / d rhs in the original problem).
        res.row_duals[rows[i].orig] = obj_sign * rows[i].flip * pi;
    }
    res.reduced_costs = Eigen::VectorXd::Zero(n_orig);
    for (int j = 0; j < n_orig; ++j) {
        double rc = red2[vmap[j].col] * vmap[j].scale;
        res.reduced_costs[j] = obj_sign * rc;
    }
    return res;
}

} // namespace ftcut
