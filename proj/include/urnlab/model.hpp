#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "urnlab/errors.hpp"
#include "urnlab/rng.hpp"
#include "urnlab/types.hpp"

namespace urnlab {

// Entries at least this close to 1 are treated as the structural value 1
// (used by star detection and by the R-hat digraph edge test).
inline constexpr double kOneTol = 1e-12;

// A validated k x k row-stochastic replacement matrix. Rows are renormalised
// on construction so that each floating-point row sum is exactly 1.0; the
// largest entry of the row absorbs the correction. Without this, the exact
// mass identity sum(U_n) = n+1 drifts by n * (row-sum error) over a run.
struct StochasticMatrix {
    int k = 0;
    Mat entries;

    double operator()(int i, int j) const { return entries(i, j); }
    const double* row(int i) const { return entries.row_ptr(i); }
};

namespace detail {

inline void normalize_row_exact(Mat& m, std::size_t i) {
    const std::size_t k = m.cols();
    double s = 0.0, c = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double x = m(i, j);
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    const double total = s + c;
    std::size_t jmax = 0;
    for (std::size_t j = 0; j < k; ++j) {
        m(i, j) /= total;
        if (m(i, j) > m(i, jmax)) jmax = j;
    }
    // Recompute the exact sum of all entries except the largest one, then
    // set the largest so the true (real-number) row sum is 1 to within half
    // an ulp of the adjusted entry.
    double rest = 0.0, cc = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        if (j == jmax) continue;
        const double x = m(i, j);
        const double t = rest + x;
        if (std::abs(rest) >= std::abs(x))
            cc += (rest - t) + x;
        else
            cc += (x - t) + rest;
        rest = t;
    }
    m(i, jmax) = 1.0 - (rest + cc);
}

}  // namespace detail

inline StochasticMatrix make_stochastic(int k, Mat entries) {
    if (k < 2) raise(Err::BadInput, "k must be >= 2, got " + std::to_string(k));
    if (entries.rows() != static_cast<std::size_t>(k) ||
        entries.cols() != static_cast<std::size_t>(k))
        raise(Err::DimensionMismatch, "replacement matrix must be k x k");
    for (int i = 0; i < k; ++i) {
        double s = 0.0;
        for (int j = 0; j < k; ++j) {
            const double x = entries(i, j);
            if (!(x >= 0.0))
                raise(Err::NegativeEntry, "R[" + std::to_string(i) + "][" +
                                              std::to_string(j) + "] = " + std::to_string(x));
            s += x;
        }
        if (std::abs(s - 1.0) > 1e-9)
            raise(Err::NonStochasticRow,
                  "row " + std::to_string(i) + " sums to " + std::to_string(s));
        detail::normalize_row_exact(entries, i);
    }
    return StochasticMatrix{k, std::move(entries)};
}

// A complete model instance: replacement matrix R, weight parameter theta
// (selection weight w(x) = theta - x), initial configuration U0.
struct ModelSpec {
    StochasticMatrix R;
    double theta = 1.0;
    Vec u0;

    int k() const { return R.k; }

    // Normalising constant k*theta - 1 of the selection probabilities.
    double kt1() const { return R.k * theta - 1.0; }

    std::uint64_t digest() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto eat = [&h](std::uint64_t v) {
            for (int b = 0; b < 8; ++b) {
                h ^= (v >> (8 * b)) & 0xff;
                h *= 0x100000001b3ULL;
            }
        };
        auto eatd = [&](double d) {
            std::uint64_t v;
            static_assert(sizeof(v) == sizeof(d));
            __builtin_memcpy(&v, &d, 8);
            eat(v);
        };
        eat(static_cast<std::uint64_t>(R.k));
        eatd(theta);
        for (double x : R.entries.data()) eatd(x);
        for (double x : u0) eatd(x);
        return h;
    }

    std::string digest_hex() const {
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(digest()));
        return buf;
    }
};

inline ModelSpec validate_model(int k, double theta, Mat r_entries, Vec u0) {
    StochasticMatrix R = make_stochastic(k, std::move(r_entries));
    if (!(theta >= 1.0))
        raise(Err::ThetaOutOfRange, "theta must be >= 1, got " + std::to_string(theta));
    if (u0.size() != static_cast<std::size_t>(k))
        raise(Err::BadInitial, "U0 must have length k");
    double s = 0.0;
    for (double x : u0) {
        if (!(x >= 0.0)) raise(Err::BadInitial, "U0 entries must be >= 0");
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-9)
        raise(Err::BadInitial, "U0 sums to " + std::to_string(s));
    Mat row(1, k);
    for (int j = 0; j < k; ++j) row(0, j) = u0[j];
    detail::normalize_row_exact(row, 0);
    for (int j = 0; j < k; ++j) u0[j] = row(0, j);
    return ModelSpec{std::move(R), theta, std::move(u0)};
}

// True iff every column sum is within 1e-10 of 1 (the limit configuration is
// uniform exactly for such R).
inline bool is_doubly_stochastic(const StochasticMatrix& R) {
    for (int j = 0; j < R.k; ++j) {
        double s = 0.0;
        for (int i = 0; i < R.k; ++i) s += R(i, j);
        if (std::abs(s - 1.0) > 1e-10) return false;
    }
    return true;
}

// A star: some column j has R[i][j] = 1 for all i != j, i.e. every other
// colour deterministically reinforces the central one.
struct StarInfo {
    int central = 0;
    Vec alpha;          // the central vertex's replacement row
    double gamma = 0.0; // (1 - alpha[central]) / (k - 1)
    // k = 2 with R = [[0,1],[1,0]]: both columns qualify; central = 0 by the
    // documented tie-break and this flag is set.
    bool both_central = false;
};

inline std::optional<StarInfo> detect_star(const StochasticMatrix& R) {
    int first = -1;
    bool second = false;
    for (int j = 0; j < R.k; ++j) {
        bool all_ones = true;
        for (int i = 0; i < R.k && all_ones; ++i)
            if (i != j && R(i, j) < 1.0 - kOneTol) all_ones = false;
        if (all_ones) {
            if (first < 0)
                first = j;
            else
                second = true;  // only possible for k = 2
        }
    }
    if (first < 0) return std::nullopt;
    StarInfo info;
    info.central = first;
    info.alpha.assign(R.row(first), R.row(first) + R.k);
    info.gamma = (1.0 - info.alpha[first]) / (R.k - 1);
    info.both_central = second;
    return info;
}

}  // namespace urnlab
