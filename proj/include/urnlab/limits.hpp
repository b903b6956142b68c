#pragma once

#include <cmath>

#include "urnlab/irreducibility.hpp"
#include "urnlab/linsolve.hpp"
#include "urnlab/model.hpp"
#include "urnlab/selection.hpp"

namespace urnlab {

// Limit configuration mu (the a.s. limit of U_n/(n+1)) and the limit draw
// distribution nu = mu A, which is the stationary vector of R-hat.
struct LimitReport {
    Vec mu;
    Vec nu;
    double solver_residual = 0.0;
};

// Residual of the defining equation (theta*1 - mu) R = (k*theta - 1) mu.
inline double limit_equation_residual(const ModelSpec& spec, const Vec& mu) {
    const int k = spec.k();
    Vec w(k);
    for (int i = 0; i < k; ++i) w[i] = spec.theta - mu[i];
    Vec lhs = vec_mat(w, spec.R.entries);
    double r = 0.0;
    for (int j = 0; j < k; ++j) r = std::max(r, std::abs(lhs[j] - spec.kt1() * mu[j]));
    return r;
}

// Solve mu ((k*theta-1) I + R) = theta (1 R), i.e. the transposed system
// ((k*theta-1) I + R^T) mu^T = theta (1 R)^T, by partial-pivot elimination
// with one refinement step. The system matrix is singular exactly when
// k*theta - 1 = 1 and -1 is an eigenvalue of R, which for stochastic R means
// the excluded Friedman case k = 2, theta = 1, R = [[0,1],[1,0]].
inline LimitReport solve_limits(const ModelSpec& spec) {
    const int k = spec.k();
    const double kt1 = spec.kt1();
    Mat m(k, k);
    Vec b(k, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            m(i, j) = spec.R(j, i);  // R^T
            b[i] += spec.theta * spec.R(j, i);
        }
        m(i, i) += kt1;
    }
    LuFactors f = lu_factor(m);
    if (f.singular)
        raise(Err::SingularSystem,
              "(k*theta-1) I + R is singular; this is the Friedman urn "
              "k=2, theta=1, R=[[0,1],[1,0]]");
    LimitReport rep;
    rep.mu = solve_refined(m, b, f);
    for (double& x : rep.mu)
        if (x < 0.0 && x > -1e-12) x = 0.0;
    rep.solver_residual = limit_equation_residual(spec, rep.mu);
    if (rep.solver_residual > 1e-10) {
        if (!hat_irreducible(spec))
            raise(Err::NoUniqueLimit,
                  "R-hat is reducible and the direct solve residual is " +
                      std::to_string(rep.solver_residual));
        raise(Err::InternalInconsistency,
              "limit solve residual " + std::to_string(rep.solver_residual) +
                  " on an irreducible model");
    }
    rep.nu = vec_mat(rep.mu, selection_operator(k, spec.theta).entries);
    return rep;
}

}  // namespace urnlab
