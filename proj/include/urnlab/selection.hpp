#pragma once

#include "urnlab/model.hpp"
#include "urnlab/types.hpp"

namespace urnlab {

// The selection operator A = theta/(k*theta-1) J - 1/(k*theta-1) I. It maps
// the current proportion vector to the draw distribution: p = (U/(n+1)) A.
// Row-stochastic and invertible for every theta >= 1, k >= 2, with the
// closed-form inverse A^{-1} = theta J - (k*theta - 1) I.
struct SelectionOperator {
    int k = 0;
    double theta = 1.0;
    Mat entries;

    Mat inverse() const {
        Mat inv(k, k, theta);
        for (int i = 0; i < k; ++i) inv(i, i) = theta - (k * theta - 1.0);
        return inv;
    }
};

inline SelectionOperator selection_operator(int k, double theta) {
    if (k < 2) raise(Err::BadInput, "k must be >= 2");
    if (!(theta >= 1.0)) raise(Err::ThetaOutOfRange, "theta must be >= 1");
    const double kt1 = k * theta - 1.0;
    Mat a(k, k, theta / kt1);
    for (int i = 0; i < k; ++i) a(i, i) = (theta - 1.0) / kt1;
    return SelectionOperator{k, theta, std::move(a)};
}

// The coupled replacement matrix R-hat = R A = (theta J - R)/(k*theta - 1).
// Entries are (theta - R_uv)/(k*theta - 1), which vanish exactly when
// theta = 1 and R_uv = 1; the closed form is used so structural zeros are
// exact rather than products rounded near zero.
inline StochasticMatrix coupled_replacement(const ModelSpec& spec) {
    const int k = spec.k();
    const double kt1 = spec.kt1();
    Mat rhat(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) rhat(i, j) = (spec.theta - spec.R(i, j)) / kt1;
    return StochasticMatrix{k, std::move(rhat)};
}

}  // namespace urnlab
