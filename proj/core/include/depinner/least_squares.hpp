// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace depinner {

struct LeastSquaresOptions {
    int max_iterations = 500;
    double rss_rel_tol = 1e-10;   // relative rss change on an accepted step
    double step_norm_tol = 1e-12; // norm of the proposed parameter step
    double damping_init = 1e-3;
    double damping_up = 10.0;   // on rejected step
    double damping_down = 0.1;  // on accepted step
};

struct LeastSquaresResult {
    Eigen::VectorXd params;
    double rss = 0.0;
    bool converged = false;
    int iterations = 0;
    /// rss after the initial evaluation and after every accepted step.
    /// Monotone non-increasing by construction; tests assert this.
    std::vector<double> rss_trace;
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Damped Gauss-Newton descent (Levenberg-Marquardt flavor) with a
/// forward-difference Jacobian, per-parameter step max(1e-8, 1e-8*|p|).
/// Damping scales the diagonal of J'J so mixed parameter magnitudes do not
/// starve one direction. Throws std::invalid_argument when the residual is
/// non-finite at `init` and std::runtime_error when it turns non-finite
/// mid-fit; hitting the iteration cap returns converged = false with the
/// best parameters seen.
LeastSquaresResult least_squares_fit(const ResidualFn& residual_fn,
                                     const Eigen::VectorXd& init,
                                     const LeastSquaresOptions& opts = {});

}  // namespace depinner
