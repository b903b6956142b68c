#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "urnlab/eigen_qr.hpp"
#include "urnlab/irreducibility.hpp"
#include "urnlab/model.hpp"
#include "urnlab/selection.hpp"

namespace urnlab {

// CLT normalisation regime: sigma_n = sqrt(n), sqrt(n log n), or no claim.
enum class Regime { SqrtN, SqrtNLogN, OutsideTheorem };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::SqrtN: return "sqrt_n";
        case Regime::SqrtNLogN: return "sqrt_n_log_n";
        case Regime::OutsideTheorem: return "outside_theorem";
    }
    return "?";
}

struct SpectralReport {
    std::vector<Complex> eig_R;
    std::vector<Complex> eig_Rhat;
    double b = 0.0;    // -1/(k*theta - 1); non-principal spectra satisfy eig_Rhat = b * eig_R
    double tau = 0.0;  // max real part over non-principal eigenvalues of R-hat
    Regime regime = Regime::SqrtN;
    bool aperiodic_hint = false;            // irreducible and k > 2
    bool beyond_stated_hypothesis = false;  // k = 2 with theta > 3/2
};

namespace detail {

// Index of the Perron root: the eigenvalue with the largest real part. For an
// irreducible stochastic matrix it is the simple eigenvalue 1.
inline std::size_t perron_index(const std::vector<Complex>& eigs) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < eigs.size(); ++i)
        if (eigs[i].real() > eigs[best].real()) best = i;
    return best;
}

// Greedy closest-pair matching between two equal-size complex multisets;
// returns the largest matched distance.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    double worst = 0.0;
    while (!a.empty()) {
        std::size_t bi = 0, bj = 0;
        double best = std::abs(a[0] - b[0]);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                const double d = std::abs(a[i] - b[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        worst = std::max(worst, best);
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(bi));
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return worst;
}

}  // namespace detail

inline Regime regime_from_tau(double tau) {
    if (std::abs(tau - 0.5) <= 1e-9) return Regime::SqrtNLogN;
    return tau < 0.5 ? Regime::SqrtN : Regime::OutsideTheorem;
}

inline SpectralReport spectrum(const ModelSpec& spec) {
    const int k = spec.k();
    SpectralReport rep;
    rep.b = -1.0 / spec.kt1();
    rep.eig_R = eigenvalues(spec.R.entries);
    rep.eig_Rhat = eigenvalues(coupled_replacement(spec).entries);
    sort_spectrum(rep.eig_R);
    sort_spectrum(rep.eig_Rhat);

    const std::size_t ph = detail::perron_index(rep.eig_Rhat);
    if (std::abs(rep.eig_Rhat[ph] - Complex(1.0, 0.0)) > 1e-8)
        raise(Err::EigenFailure, "Perron root of R-hat is not within 1e-8 of 1");

    rep.tau = -1.0;
    for (std::size_t i = 0; i < rep.eig_Rhat.size(); ++i)
        if (i != ph) rep.tau = std::max(rep.tau, rep.eig_Rhat[i].real());

    // Non-principal spectrum of R-hat must equal b times the non-principal
    // spectrum of R, as multisets.
    std::vector<Complex> lhs, rhs;
    std::size_t pr = 0;
    double best = std::abs(rep.eig_R[0] - Complex(1.0, 0.0));
    for (std::size_t i = 1; i < rep.eig_R.size(); ++i) {
        const double d = std::abs(rep.eig_R[i] - Complex(1.0, 0.0));
        if (d < best) {
            best = d;
            pr = i;
        }
    }
    for (std::size_t i = 0; i < rep.eig_R.size(); ++i)
        if (i != pr) rhs.push_back(rep.b * rep.eig_R[i]);
    for (std::size_t i = 0; i < rep.eig_Rhat.size(); ++i)
        if (i != ph) lhs.push_back(rep.eig_Rhat[i]);
    const double mdist = detail::multiset_distance(lhs, rhs);
    if (mdist > 1e-8)
        raise(Err::InternalInconsistency,
              "spectra of R and R-hat violate the b-scaling identity by " +
                  std::to_string(mdist));

    rep.regime = regime_from_tau(rep.tau);
    if (rep.regime == Regime::OutsideTheorem && k != 2)
        raise(Err::InternalInconsistency, "outside-theorem regime with k != 2");
    rep.aperiodic_hint = hat_irreducible(spec) && k > 2;
    rep.beyond_stated_hypothesis = (k == 2 && spec.theta > 1.5);
    return rep;
}

// Regime classification under the CLT hypotheses; requires an irreducible
// R-hat. Cross-checks the spectral rule against the explicit case analysis:
// k >= 4 is always sqrt(n); k = 3 gets the log factor exactly when theta = 1
// and -1 is an eigenvalue of R.
inline Regime classify_regime(const SpectralReport& sr, const ModelSpec& spec) {
    if (!hat_irreducible(spec))
        raise(Err::ReducibleInput, "regime classification requires irreducible R-hat");
    const Regime regime = regime_from_tau(sr.tau);
    const int k = spec.k();
    if (k >= 4 && regime != Regime::SqrtN)
        raise(Err::InternalInconsistency, "k >= 4 must classify as sqrt_n");
    if (k == 3) {
        bool has_minus_one = false;
        for (const Complex& ev : sr.eig_R)
            if (std::abs(ev - Complex(-1.0, 0.0)) <= 1e-9) has_minus_one = true;
        const bool log_case = (spec.theta == 1.0) && has_minus_one;
        if (log_case != (regime == Regime::SqrtNLogN))
            raise(Err::InternalInconsistency,
                  "k = 3 spectral rule disagrees with the explicit case table");
    }
    return regime;
}

}  // namespace urnlab
