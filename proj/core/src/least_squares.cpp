// Copyright (c) 2026 the depinner developers.
// SPDX-License-Identifier: Apache-2.0

#include "depinner/least_squares.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace depinner {

namespace {

bool all_finite(const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) return false;
    }
    return true;
}

[[noreturn]] void throw_non_finite(const char* where, const Eigen::VectorXd& params) {
    std::ostringstream os;
    os << "least_squares_fit: non-finite residual " << where << " at params [";
    for (Eigen::Index i = 0; i < params.size(); ++i) {
        os << (i ? ", " : "") << params[i];
    }
    os << "]";
    throw std::runtime_error(os.str());
}

}  // namespace

LeastSquaresResult least_squares_fit(const ResidualFn& residual_fn,
                                     const Eigen::VectorXd& init,
                                     const LeastSquaresOptions& opts) {
    if (!all_finite(init)) {
        throw std::invalid_argument("least_squares_fit: non-finite initial parameters");
    }
    Eigen::VectorXd params = init;
    Eigen::VectorXd res = residual_fn(params);
    if (!all_finite(res)) {
        throw std::invalid_argument("least_squares_fit: residual non-finite at initial parameters");
    }

    const Eigen::Index n_par = params.size();
    const Eigen::Index n_res = res.size();
    double rss = res.squaredNorm();

    LeastSquaresResult out;
    out.rss_trace.push_back(rss);

    if (rss == 0.0) {
        out.params = params;
        out.rss = 0.0;
        out.converged = true;
        return out;
    }

    double damping = opts.damping_init;
    bool converged = false;
    int iter = 0;

    for (; iter < opts.max_iterations && !converged; ++iter) {
        // Forward-difference Jacobian.
        Eigen::MatrixXd jac(n_res, n_par);
        for (Eigen::Index j = 0; j < n_par; ++j) {
            const double step = std::max(1e-8, 1e-8 * std::abs(params[j]));
            Eigen::VectorXd probe = params;
            probe[j] += step;
            const Eigen::VectorXd r2 = residual_fn(probe);
            if (!all_finite(r2)) throw_non_finite("during Jacobian evaluation", probe);
            jac.col(j) = (r2 - res) / step;
        }

        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd grad = jac.transpose() * res;
        Eigen::VectorXd diag = jtj.diagonal();
        const double diag_floor = std::max(diag.maxCoeff() * 1e-14, 1e-300);
        for (Eigen::Index j = 0; j < n_par; ++j) diag[j] = std::max(diag[j], diag_floor);

        Eigen::MatrixXd damped = jtj;
        damped.diagonal() += damping * diag;
        const Eigen::VectorXd step = damped.ldlt().solve(-grad);

        if (!all_finite(step)) {
            damping *= opts.damping_up;
            continue;
        }
        if (step.norm() < opts.step_norm_tol) {
            converged = true;
            break;
        }

        const Eigen::VectorXd candidate = params + step;
        const Eigen::VectorXd res_cand = residual_fn(candidate);
        if (!all_finite(res_cand)) throw_non_finite("during step evaluation", candidate);
        const double rss_cand = res_cand.squaredNorm();

        if (rss_cand < rss) {
            const double rel_change = (rss - rss_cand) / std::max(rss, std::numeric_limits<double>::min());
            params = candidate;
            res = res_cand;
            rss = rss_cand;
            out.rss_trace.push_back(rss);
            damping = std::max(damping * opts.damping_down, 1e-15);
            if (rel_change < opts.rss_rel_tol || rss == 0.0) converged = true;
        } else {
            damping *= opts.damping_up;
            if (damping > 1e15) break;  // stalled; step-norm check above ends clean stalls
        }
    }

    out.params = params;
    out.rss = rss;
    out.converged = converged;
    out.iterations = iter;
    return out;
}

}  // namespace depinner
