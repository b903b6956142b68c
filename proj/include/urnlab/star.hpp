#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "urnlab/model.hpp"
#include "urnlab/trajectory.hpp"

namespace urnlab {

// Star-case diagnostics for theta = 1: the eigenvector xi of R-hat for the
// eigenvalue gamma, the products Pi_n(gamma) = prod_{i<=n} (1 + gamma/i),
// the nonnegative martingale W_n = U_n xi / Pi_n(gamma), and the exact
// pairwise identity U_{n,h}/alpha_h - U_{n,l}/alpha_l = const.
struct StarDiagnostics {
    Vec xi;
    std::vector<double> pi_n;          // Pi at each checkpoint
    std::vector<double> w_n;           // martingale at each checkpoint
    std::vector<double> central_prop;  // U_{n,central}/(n+1) at each checkpoint
    double identity_residual = 0.0;
};

// Running product Pi_n(gamma) evaluated at each requested n (ascending).
// Kept as an honest product; the Gamma-function asymptotic
// Pi_n ~ n^gamma / Gamma(gamma + 1) is only ever used as a sanity check.
inline std::vector<double> pi_products(double gamma, const std::vector<std::int64_t>& ns) {
    std::vector<double> out;
    out.reserve(ns.size());
    double prod = 1.0;
    std::int64_t i = 0;
    for (std::int64_t n : ns) {
        while (i < n) {
            ++i;
            prod *= 1.0 + gamma / static_cast<double>(i);
        }
        out.push_back(prod);
    }
    return out;
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline StarDiagnostics star_diagnostics(const TrajectoryRecord& rec, const StarInfo& star) {
    const std::size_t k = rec.u0.size();
    if (star.alpha.size() != k) raise(Err::NotAStar, "star info does not match the record");
    if (star.gamma <= 0.0)
        raise(Err::GammaZero,
              "alpha_0 = 1: the urn is deterministic and the diagnostics degenerate");

    StarDiagnostics d;
    d.xi.assign(k, 1.0 / star.gamma);
    d.xi[static_cast<std::size_t>(star.central)] = 0.0;

    std::vector<std::int64_t> ns;
    ns.reserve(rec.checkpoints.size());
    for (const Snapshot& cp : rec.checkpoints) ns.push_back(cp.n);
    d.pi_n = pi_products(star.gamma, ns);

    // Baseline of the exact pairwise identity is its value at n = 0.
    auto pair_value = [&](const Vec& u, std::size_t h, std::size_t l) {
        return u[h] / star.alpha[h] - u[l] / star.alpha[l];
    };

    d.w_n.reserve(rec.checkpoints.size());
    d.central_prop.reserve(rec.checkpoints.size());
    double worst = 0.0;
    for (std::size_t c = 0; c < rec.checkpoints.size(); ++c) {
        const Snapshot& cp = rec.checkpoints[c];
        d.w_n.push_back(dot(cp.u, d.xi) / d.pi_n[c]);
        d.central_prop.push_back(cp.u[static_cast<std::size_t>(star.central)] /
                                 static_cast<double>(cp.n + 1));
        for (std::size_t h = 0; h < k; ++h) {
            if (h == static_cast<std::size_t>(star.central) || star.alpha[h] <= 0.0) continue;
            for (std::size_t l = h + 1; l < k; ++l) {
                if (l == static_cast<std::size_t>(star.central) || star.alpha[l] <= 0.0)
                    continue;
                worst = std::max(worst, std::abs(pair_value(cp.u, h, l) -
                                                 pair_value(rec.u0, h, l)));
            }
        }
    }
    d.identity_residual = worst;
    return d;
}

// Limit covariance of the non-central colour counts under sqrt(n) scaling:
// (1/(k-1)) I - (1/(k-1)^2) J over the k-1 non-central colours.
inline Mat star_count_covariance(int k) {
    if (k < 2) raise(Err::BadInput, "k must be >= 2");
    const double km1 = static_cast<double>(k - 1);
    Mat m(k - 1, k - 1, -1.0 / (km1 * km1));
    for (int i = 0; i < k - 1; ++i) m(i, i) += 1.0 / km1;
    return m;
}

}  // namespace urnlab
