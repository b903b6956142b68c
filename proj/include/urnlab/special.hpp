#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "urnlab/errors.hpp"

namespace urnlab {

namespace detail {

// Continued fraction for the incomplete beta function (modified Lentz).
inline double beta_cont_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 400;
    constexpr double kEps = 1e-16;
    constexpr double kFpMin = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    raise(Err::InternalInconsistency, "incomplete beta continued fraction did not converge");
}

}  // namespace detail

// Regularized incomplete beta I_x(a, b), absolute accuracy well below 1e-10
// for the parameter ranges used here.
inline double ibeta_regularized(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) raise(Err::BadInput, "ibeta needs a, b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front =
        std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                 b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * detail::beta_cont_fraction(a, b, x) / a;
    return 1.0 - front * detail::beta_cont_fraction(b, a, 1.0 - x) / b;
}

inline std::function<double(double)> beta_cdf(double a, double b) {
    return [a, b](double x) { return ibeta_regularized(a, b, x); };
}

// One-sample Kolmogorov-Smirnov statistic sup_x |F_hat(x) - F(x)| against a
// continuous reference CDF on [0, 1].
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& reference_cdf) {
    if (samples.empty()) raise(Err::EmptySample, "KS statistic needs at least one sample");
    std::sort(samples.begin(), samples.end());
    const double m = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = reference_cdf(samples[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / m - f);
        d = std::max(d, f - static_cast<double>(i) / m);
    }
    return d;
}

}  // namespace urnlab
