// Derivative-free trust-region minimizer in the COBYLA family: linear models
// of the objective and inequality constraints are interpolated on a simplex
// of dimension+1 points and optimized inside a trust radius that shrinks from
// initial_trust_radius to final_trust_radius.

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <limits>
#include <vector>

namespace qwalk {

struct OptimizerOptions {
    double initial_trust_radius = 0.5;
    double final_trust_radius = 1e-6;
    int max_evaluations = 1000;

    void validate(int dimension) const;
};

enum class OptimizerStatus {
    converged,         // trust radius reached final_trust_radius
    max_evaluations,   // evaluation budget exhausted
    degenerate,        // simplex collapsed beyond repair
    nonfinite,         // objective or constraint returned a non-finite value
};

struct OptimizeResult {
    Eigen::VectorXd x;
    double objective = std::numeric_limits<double>::quiet_NaN();
    double max_violation = 0.0;
    // Best-so-far objective value after each evaluation.
    std::vector<double> trace;
    int evaluations = 0;
    OptimizerStatus status = OptimizerStatus::converged;
};

using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;

// Minimizes objective(x) subject to constraints[i](x) >= 0. Returns the best
// point seen across all evaluations (feasible points preferred), not merely
// the final simplex pole.
OptimizeResult cobyla_minimize(const ObjectiveFn& objective, const Eigen::VectorXd& x0,
                               const OptimizerOptions& options = {},
                               const std::vector<ObjectiveFn>& constraints = {});

}  // namespace qwalk
