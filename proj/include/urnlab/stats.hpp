#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "urnlab/limits.hpp"
#include "urnlab/spectrum.hpp"
#include "urnlab/trajectory.hpp"

namespace urnlab {

// A replicas x k matrix of one statistic (U_n, N_n, or a standardized
// version), all taken at the same step n.
struct EnsembleSample {
    std::int64_t n = 0;
    std::size_t replicas = 0;
    std::size_t k = 0;
    std::vector<double> rows;  // row-major, replicas x k

    double at(std::size_t r, std::size_t j) const { return rows[r * k + j]; }
    double& at(std::size_t r, std::size_t j) { return rows[r * k + j]; }
};

// Pull the U-vectors (or N-vectors) at checkpoint n out of an ensemble.
inline EnsembleSample ensemble_u(const std::vector<TrajectoryRecord>& recs, std::int64_t n) {
    EnsembleSample s;
    s.n = n;
    s.replicas = recs.size();
    for (const TrajectoryRecord& rec : recs) {
        bool found = false;
        for (const Snapshot& cp : rec.checkpoints)
            if (cp.n == n) {
                if (s.k == 0) s.k = cp.u.size();
                s.rows.insert(s.rows.end(), cp.u.begin(), cp.u.end());
                found = true;
                break;
            }
        if (!found) raise(Err::BadInput, "no checkpoint at n = " + std::to_string(n));
    }
    return s;
}

inline EnsembleSample ensemble_n(const std::vector<TrajectoryRecord>& recs, std::int64_t n) {
    EnsembleSample s;
    s.n = n;
    s.replicas = recs.size();
    for (const TrajectoryRecord& rec : recs) {
        bool found = false;
        for (const Snapshot& cp : rec.checkpoints)
            if (cp.n == n) {
                if (s.k == 0) s.k = cp.counts.size();
                for (std::int64_t c : cp.counts) s.rows.push_back(static_cast<double>(c));
                found = true;
                break;
            }
        if (!found) raise(Err::BadInput, "no checkpoint at n = " + std::to_string(n));
    }
    return s;
}

struct StatSummary {
    Vec mean;
    Mat covariance;
    std::optional<double> ks;
    std::optional<double> slope;
};

// Per-checkpoint sup-norm distance between U_n/(n+1) and the limit mu.
inline Vec slln_residual(const TrajectoryRecord& rec, const LimitReport& limits) {
    Vec out;
    out.reserve(rec.checkpoints.size());
    for (const Snapshot& cp : rec.checkpoints) {
        if (cp.u.size() != limits.mu.size())
            raise(Err::DimensionMismatch, "record and limit report have different k");
        out.push_back(inf_norm_diff(cp.u_proportions(), limits.mu));
    }
    return out;
}

// Limit of N_n/n: (theta*1 - mu)/(k*theta - 1), which equals nu.
inline Vec colour_count_limit(const ModelSpec& spec, const LimitReport& limits) {
    const int k = spec.k();
    Vec out(k);
    for (int j = 0; j < k; ++j) out[j] = (spec.theta - limits.mu[j]) / spec.kt1();
    return out;
}

inline double sigma_n(std::int64_t n, Regime regime) {
    switch (regime) {
        case Regime::SqrtN:
            return std::sqrt(static_cast<double>(n));
        case Regime::SqrtNLogN:
            return std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n)));
        case Regime::OutsideTheorem:
            break;
    }
    raise(Err::UnsupportedRegime, "no sigma_n is defined outside the theorem");
}

// (row - n*center) / sigma_n, rowwise.
inline EnsembleSample standardize(const EnsembleSample& sample, const Vec& center,
                                  Regime regime) {
    if (sample.n < 2) raise(Err::BadInput, "standardize needs n >= 2");
    if (center.size() != sample.k)
        raise(Err::DimensionMismatch, "center has wrong length");
    const double s = sigma_n(sample.n, regime);
    EnsembleSample out = sample;
    for (std::size_t r = 0; r < sample.replicas; ++r)
        for (std::size_t j = 0; j < sample.k; ++j)
            out.at(r, j) = (sample.at(r, j) - static_cast<double>(sample.n) * center[j]) / s;
    return out;
}

// Sample mean and unbiased sample covariance, accumulated in replica order
// so results do not depend on any parallel schedule upstream.
inline StatSummary empirical_moments(const EnsembleSample& sample) {
    if (sample.replicas < 2) raise(Err::TooFewReplicas, "need at least 2 replicas");
    const std::size_t m = sample.replicas, k = sample.k;
    StatSummary out;
    out.mean.assign(k, 0.0);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j < k; ++j) out.mean[j] += sample.at(r, j);
    for (double& x : out.mean) x /= static_cast<double>(m);
    out.covariance = Mat(k, k);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i < k; ++i) {
            const double di = sample.at(r, i) - out.mean[i];
            for (std::size_t j = i; j < k; ++j)
                out.covariance(i, j) += di * (sample.at(r, j) - out.mean[j]);
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            out.covariance(i, j) /= static_cast<double>(m - 1);
            out.covariance(j, i) = out.covariance(i, j);
        }
    return out;
}

// || Sigma_U - R^T Sigma_N R ||_F / max(||Sigma_U||_F, 1e-12).
inline double sigma_relation_residual(const Mat& sigma_u, const Mat& sigma_n,
                                      const StochasticMatrix& R) {
    const Mat rt = transpose(R.entries);
    const Mat rhs = mat_mul(mat_mul(rt, sigma_n), R.entries);
    double num = 0.0;
    for (std::size_t i = 0; i < sigma_u.data().size(); ++i) {
        const double d = sigma_u.data()[i] - rhs.data()[i];
        num += d * d;
    }
    return std::sqrt(num) / std::max(frobenius_norm(sigma_u), 1e-12);
}

inline double column_variance(const EnsembleSample& sample, std::size_t j) {
    if (sample.replicas < 2) raise(Err::TooFewReplicas, "need at least 2 replicas");
    double mean = 0.0;
    for (std::size_t r = 0; r < sample.replicas; ++r) mean += sample.at(r, j);
    mean /= static_cast<double>(sample.replicas);
    double ss = 0.0;
    for (std::size_t r = 0; r < sample.replicas; ++r) {
        const double d = sample.at(r, j) - mean;
        ss += d * d;
    }
    return ss / static_cast<double>(sample.replicas - 1);
}

// Empirical check of the sigma_n dichotomy for colour j over a geometric n
// grid of independent ensembles. SqrtN: least-squares slope of log Var
// against log n (should be near 1). SqrtNLogN: max/min ratio of
// Var/(n ln n) across the grid (should be near 1).
inline double variance_scaling_slope(const std::vector<EnsembleSample>& ensembles,
                                     std::size_t colour, Regime regime) {
    if (ensembles.size() < 3) raise(Err::BadInput, "need at least 3 grid points");
    std::vector<double> vars, ns;
    for (const EnsembleSample& e : ensembles) {
        const double v = column_variance(e, colour);
        if (v < 1e-12)
            raise(Err::DegenerateVariance, "variance below 1e-12 for colour " +
                                               std::to_string(colour));
        vars.push_back(v);
        ns.push_back(static_cast<double>(e.n));
    }
    if (regime == Regime::SqrtNLogN) {
        double lo = vars[0] / (ns[0] * std::log(ns[0]));
        double hi = lo;
        for (std::size_t g = 1; g < vars.size(); ++g) {
            const double ratio = vars[g] / (ns[g] * std::log(ns[g]));
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        return hi / lo;
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double q = static_cast<double>(vars.size());
    for (std::size_t g = 0; g < vars.size(); ++g) {
        const double lx = std::log(ns[g]);
        const double ly = std::log(vars[g]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (q * sxy - sx * sy) / (q * sxx - sx * sx);
}

}  // namespace urnlab
