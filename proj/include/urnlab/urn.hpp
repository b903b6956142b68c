#pragma once

#include <cstdint>
#include <string>

#include "urnlab/model.hpp"
#include "urnlab/rng.hpp"
#include "urnlab/types.hpp"

namespace urnlab {

// Running process state. U is the ball-mass vector (sums to n+1), N counts
// how often each colour has been drawn (sums to n). U is accumulated with
// Kahan compensation so the exact identities hold to ~1e-9 even over 1e6
// fractional-replacement steps.
struct UrnState {
    std::int64_t n = 0;
    Vec u;
    Vec ucomp;  // Kahan carries, one per colour
    std::vector<std::int64_t> counts;
    int last_draw = -1;  // -1 before the first draw
};

inline UrnState init_state(const ModelSpec& spec) {
    UrnState st;
    st.n = 0;
    st.u = spec.u0;
    st.ucomp.assign(spec.u0.size(), 0.0);
    st.counts.assign(spec.u0.size(), 0);
    return st;
}

// Draw distribution p_j = theta/(k*theta-1) - U_j / ((k*theta-1)(n+1)),
// equivalently (U/(n+1)) A. Nonnegative for theta >= 1; entries within
// -1e-14 of zero are rounding noise and get clamped.
inline Vec selection_distribution(const UrnState& st, const ModelSpec& spec) {
    const int k = spec.k();
    const double inv = 1.0 / (spec.kt1() * static_cast<double>(st.n + 1));
    Vec p(k);
    for (int j = 0; j < k; ++j) {
        double v = spec.theta / spec.kt1() - st.u[j] * inv;
        if (v < 0.0) v = 0.0;
        p[j] = v;
    }
    return p;
}

// Inverse-CDF draw: cumulative sums left-to-right in colour order, so
// u = 0 selects colour 0 whenever p_0 > 0. A uniform that lands beyond the
// accumulated total (rounding at the tail) maps to the last positive-mass
// colour.
inline int draw_from_uniform(const UrnState& st, const ModelSpec& spec, double uvar) {
    const int k = spec.k();
    const double c1 = spec.theta / spec.kt1();
    const double inv = 1.0 / (spec.kt1() * static_cast<double>(st.n + 1));
    double acc = 0.0;
    int last_positive = -1;
    for (int j = 0; j < k; ++j) {
        double pj = c1 - st.u[j] * inv;
        if (pj < 0.0) pj = 0.0;
        if (pj > 0.0) last_positive = j;
        acc += pj;
        if (uvar < acc) return j;
    }
    return last_positive;
}

// One draw + replacement, consuming exactly one uniform variate.
inline int step(UrnState& st, const ModelSpec& spec, RngStream& rng) {
    const int k = spec.k();
    const int draw = draw_from_uniform(st, spec, rng.next_uniform());

    const double* row = spec.R.row(draw);
    for (int j = 0; j < k; ++j) {
        const double y = row[j] - st.ucomp[j];
        const double t = st.u[j] + y;
        st.ucomp[j] = (t - st.u[j]) - y;
        st.u[j] = t;
    }
    st.counts[draw] += 1;
    st.n += 1;
    st.last_draw = draw;
    return draw;
}

// Verify the exact state identities: sum(U) = n+1, sum(N) = n, and
// U = U0 + N R, each within 1e-9. Throws InvariantViolation.
inline void check_state_invariants(const UrnState& st, const ModelSpec& spec,
                                   double tol = 1e-9) {
    const int k = spec.k();
    const double mass = sum_exact(st.u);
    if (std::abs(mass - static_cast<double>(st.n + 1)) > tol)
        raise(Err::InvariantViolation,
              "sum(U) = " + std::to_string(mass) + " != n+1 at step " + std::to_string(st.n));
    std::int64_t total = 0;
    for (std::int64_t c : st.counts) total += c;
    if (total != st.n)
        raise(Err::InvariantViolation, "sum(N) != n at step " + std::to_string(st.n));
    for (int j = 0; j < k; ++j) {
        double s = spec.u0[j], c = 0.0;
        for (int i = 0; i < k; ++i) {
            const double term = static_cast<double>(st.counts[i]) * spec.R(i, j);
            const double t = s + term;
            if (std::abs(s) >= std::abs(term))
                c += (s - t) + term;
            else
                c += (term - t) + s;
            s = t;
        }
        if (std::abs((s + c) - st.u[j]) > tol)
            raise(Err::InvariantViolation, "U != U0 + N R in colour " + std::to_string(j) +
                                               " at step " + std::to_string(st.n));
    }
}

}  // namespace urnlab
