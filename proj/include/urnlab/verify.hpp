#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "urnlab/csv.hpp"
#include "urnlab/io.hpp"
#include "urnlab/special.hpp"
#include "urnlab/star.hpp"
#include "urnlab/stats.hpp"

namespace urnlab {

// Statistical verification of the limit theorems against fresh simulations.
// Every check is {name, inputs digest, statistic, threshold, pass}; a check
// passes iff statistic <= threshold. Thresholds at the full budget are the
// acceptance-grade values; the quick budget trades sharpness for runtime
// (see the README table).

enum class Budget { Quick, Full };

inline const char* budget_name(Budget b) { return b == Budget::Quick ? "quick" : "full"; }

struct CheckResult {
    std::string name;
    std::string inputs_digest;
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;
};

struct VerifyReport {
    std::string suite;
    Budget budget = Budget::Quick;
    std::uint64_t seed = 0;
    std::string model_digest;
    std::vector<CheckResult> checks;
    std::vector<std::string> skipped;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct BudgetParams {
    std::int64_t traj_n;
    std::int64_t ens_n;
    std::uint64_t ens_m;
    std::uint64_t cov_m;
    std::int64_t star_n;
    std::vector<std::int64_t> grid;
    double slln_tol;
    double slope_dev;
    double nlogn_ratio;
    double cov_entry_rel;
    double ks_tol;
    std::int64_t friedman_n;
};

inline BudgetParams budget_params(Budget b) {
    if (b == Budget::Full)
        return BudgetParams{1000000, 10000,  2000, 5000, 100000, {1000, 10000, 100000},
                            0.01,    0.1,    1.25, 0.10, 0.05,   10000};
    return BudgetParams{10000, 10000, 500,  500,  10000, {100, 1000, 10000},
                        0.05,  0.2,   1.60, 0.25, 0.08,  2000};
}

namespace detail {

inline std::string check_digest(const ModelSpec& spec, std::uint64_t seed, Budget b) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(
                      mix64(spec.digest() ^ mix64(seed) ^ (b == Budget::Full ? 1u : 0u))));
    return buf;
}

inline std::uint64_t suite_seed(std::uint64_t seed, const char* suite) {
    std::uint64_t h = seed;
    for (const char* p = suite; *p; ++p) h = mix64(h ^ static_cast<std::uint64_t>(*p));
    return h;
}

struct Checker {
    VerifyReport& rep;
    std::string digest;

    CheckResult& add(const std::string& name, double statistic, double threshold,
                     std::string note = "") {
        rep.checks.push_back(CheckResult{name, digest, statistic, threshold,
                                         statistic <= threshold, std::move(note)});
        return rep.checks.back();
    }
};

inline double u0_xi(const ModelSpec& spec, const StarInfo& star) {
    double s = 0.0;
    for (int j = 0; j < spec.k(); ++j)
        if (j != star.central) s += spec.u0[j];
    return s / star.gamma;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline void suite_invariants(VerifyReport& rep, const ModelSpec& spec, const BudgetParams& bp,
                             std::uint64_t seed, unsigned threads) {
    detail::Checker ck{rep, rep.checks.empty() ? detail::check_digest(spec, seed, rep.budget)
                                               : rep.checks.front().inputs_digest};
    const auto cps = checkpoint_list(Schedule{Schedule::Kind::Geometric, 10.0}, bp.traj_n);
    RunOptions opts;
    opts.record_draws = true;
    const std::uint64_t m = 5;
    std::vector<TrajectoryRecord> recs;
    try {
        recs = run_ensemble(spec, bp.traj_n, m, detail::suite_seed(seed, "invariants"), cps,
                            opts, threads);
    } catch (const UrnError& e) {
        ck.add("state_identities", 1.0, 1e-9, e.what());
        return;
    }
    double worst_state = 0.0;
    double worst_coupling = 0.0;
    for (const TrajectoryRecord& rec : recs) {
        for (const Snapshot& cp : rec.checkpoints) {
            worst_state = std::max(worst_state,
                                   std::abs(sum_exact(cp.u) - static_cast<double>(cp.n + 1)));
            Vec expect = spec.u0;
            for (int j = 0; j < spec.k(); ++j)
                for (int i = 0; i < spec.k(); ++i)
                    expect[j] += static_cast<double>(cp.counts[i]) * spec.R(i, j);
            worst_state = std::max(worst_state, inf_norm_diff(expect, cp.u));
        }
        worst_coupling = std::max(
            worst_coupling, coupling_residual(rec, spec) / static_cast<double>(bp.traj_n + 1));
    }
    ck.add("state_identities", worst_state, 1e-9);
    ck.add("coupling_residual_per_mass", worst_coupling, 1e-8);

    // The two draw-distribution formulas must agree along a trajectory.
    const Mat a = selection_operator(spec.k(), spec.theta).entries;
    RngStream rng(detail::suite_seed(seed, "two-forms"), 0);
    UrnState st = init_state(spec);
    double worst_forms = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const Vec p = selection_distribution(st, spec);
        Vec props(spec.k());
        for (int j = 0; j < spec.k(); ++j)
            props[j] = st.u[j] / static_cast<double>(st.n + 1);
        worst_forms = std::max(worst_forms, inf_norm_diff(p, vec_mat(props, a)));
        step(st, spec, rng);
    }
    ck.add("selection_two_formulas", worst_forms, 1e-12);
}

inline void suite_slln(VerifyReport& rep, const ModelSpec& spec, const BudgetParams& bp,
                       std::uint64_t seed, unsigned threads) {
    (void)threads;
    if (!hat_irreducible(spec))
        raise(Err::InapplicableSuite,
              "the strong-law limit requires an irreducible coupled matrix; this model has "
              "theta = 1 with a star replacement matrix, so the coupled matrix is reducible "
              "(use the star suite instead)");
    detail::Checker ck{rep, detail::check_digest(spec, seed, rep.budget)};
    const LimitReport lim = solve_limits(spec);
    const auto cps = checkpoint_list(Schedule{Schedule::Kind::Geometric, 10.0}, bp.traj_n);
    const TrajectoryRecord rec = run_trajectory(
        spec, bp.traj_n, cps, RngStream(detail::suite_seed(seed, "slln"), 0));
    const Vec res = slln_residual(rec, lim);
    ck.add("slln_u_final", res.back(), bp.slln_tol);
    // Compare against the checkpoint two decades earlier.
    std::size_t early = 0;
    for (std::size_t i = 0; i < rec.checkpoints.size(); ++i)
        if (rec.checkpoints[i].n * 100 <= bp.traj_n) early = i;
    ck.add("slln_residual_decreasing", res.back() / std::max(res[early], 1e-300), 1.0,
           "final residual over the residual two decades earlier");
}

inline void suite_counts(VerifyReport& rep, const ModelSpec& spec, const BudgetParams& bp,
                         std::uint64_t seed, unsigned threads) {
    detail::Checker ck{rep, detail::check_digest(spec, seed, rep.budget)};
    const auto star = detect_star(spec.R);
    const bool irreducible = hat_irreducible(spec);
    if (!irreducible && star && star->both_central)
        raise(Err::InapplicableSuite,
              "colour-count limits are not stated for the two-colour swap urn at theta = 1 "
              "(its count proportions converge to a Beta-distributed limit; use the "
              "friedman suite)");
    const auto cps = checkpoint_list(Schedule{Schedule::Kind::Geometric, 10.0}, bp.traj_n);
    const TrajectoryRecord rec = run_trajectory(
        spec, bp.traj_n, cps, RngStream(detail::suite_seed(seed, "counts"), 0));
    const Snapshot& fin = rec.checkpoints.back();
    const Vec nprop = fin.count_proportions();
    if (irreducible) {
        const LimitReport lim = solve_limits(spec);
        const Vec limit = colour_count_limit(spec, lim);
        ck.add("counts_limit", inf_norm_diff(nprop, limit), bp.slln_tol);
    } else {
        // Star at theta = 1: N_{n,0}/n -> 0 and N_{n,j}/n -> 1/(k-1). The
        // approach rate is n^{gamma-1}, so the tolerance scales with it.
        const double km1 = static_cast<double>(spec.k() - 1);
        double stat = std::abs(nprop[static_cast<std::size_t>(star->central)]);
        for (int j = 0; j < spec.k(); ++j)
            if (j != star->central)
                stat = std::max(stat, std::abs(nprop[static_cast<std::size_t>(j)] - 1.0 / km1));
        const double wbar =
            detail::u0_xi(spec, *star) / std::tgamma(1.0 + star->gamma);
        const double rate = star->gamma * wbar *
                            std::pow(static_cast<double>(bp.traj_n), star->gamma - 1.0);
        ck.add("star_counts_limit", stat, std::max(bp.slln_tol, 4.0 * rate));
    }
    std::int64_t total = 0;
    for (std::int64_t c : fin.counts) total += c;
    ck.add("counts_rows_exact", std::abs(static_cast<double>(total - fin.n)), 0.0,
           "sum of colour counts must equal n exactly");
    (void)threads;
}

inline void suite_clt(VerifyReport& rep, const ModelSpec& spec, const BudgetParams& bp,
                      std::uint64_t seed, unsigned threads) {
    if (!hat_irreducible(spec))
        raise(Err::InapplicableSuite,
              "the configuration CLT requires an irreducible coupled matrix; this model has "
              "theta = 1 with a star replacement matrix (use the star suite instead)");
    const SpectralReport sr = spectrum(spec);
    const Regime regime = classify_regime(sr, spec);
    if (regime == Regime::OutsideTheorem)
        raise(Err::InapplicableSuite,
              "no CLT scaling is stated for k = 2 models whose non-principal eigenvalue "
              "lies below (1-2*theta)/2 (tau > 1/2)");
    detail::Checker ck{rep, detail::check_digest(spec, seed, rep.budget)};
    const LimitReport lim = solve_limits(spec);
    const Vec nu = colour_count_limit(spec, lim);

    // Independent ensembles on the geometric n grid (disjoint replica bases).
    std::vector<EnsembleSample> u_samples;
    std::vector<TrajectoryRecord> largest;
    for (std::size_t g = 0; g < bp.grid.size(); ++g) {
        const std::int64_t n = bp.grid[g];
        auto recs = run_ensemble(spec, n, bp.ens_m, detail::suite_seed(seed, "clt"), {n}, {},
                                 threads, g * bp.ens_m);
        u_samples.push_back(ensemble_u(recs, n));
        if (g + 1 == bp.grid.size()) largest = std::move(recs);
    }
    std::size_t colour = 0;
    {
        EnsembleSample centered = u_samples.back();
        for (std::size_t r = 0; r < centered.replicas; ++r)
            for (std::size_t j = 0; j < centered.k; ++j)
                centered.at(r, j) -= static_cast<double>(centered.n) * lim.mu[j];
        double best = -1.0;
        for (std::size_t j = 0; j < centered.k; ++j) {
            const double v = column_variance(centered, j);
            if (v > best) {
                best = v;
                colour = j;
            }
        }
    }
    std::vector<EnsembleSample> centered_samples;
    for (const EnsembleSample& s : u_samples) {
        EnsembleSample c = s;
        for (std::size_t r = 0; r < c.replicas; ++r)
            for (std::size_t j = 0; j < c.k; ++j)
                c.at(r, j) -= static_cast<double>(c.n) * lim.mu[j];
        centered_samples.push_back(std::move(c));
    }
    if (regime == Regime::SqrtN) {
        const double slope = variance_scaling_slope(centered_samples, colour, regime);
        ck.add("clt_loglog_slope", std::abs(slope - 1.0), bp.slope_dev,
               "log Var vs log n slope = " + std::to_string(slope) + " for colour " +
                   std::to_string(colour));
    } else {
        const double ratio = variance_scaling_slope(centered_samples, colour, regime);
        ck.add("clt_nlogn_ratio", ratio, bp.nlogn_ratio,
               "max/min of Var/(n ln n) across the grid for colour " + std::to_string(colour));
    }

    const std::int64_t n_big = bp.grid.back();
    const EnsembleSample su = standardize(ensemble_u(largest, n_big), lim.mu, regime);
    const EnsembleSample sn = standardize(ensemble_n(largest, n_big), nu, regime);

    // Rows of the standardized U-sample all equal sum(U0)/sigma_n.
    const double expected_row = sum(spec.u0) / sigma_n(n_big, regime);
    double row_dev = 0.0;
    for (std::size_t r = 0; r < su.replicas; ++r) {
        double s = 0.0;
        for (std::size_t j = 0; j < su.k; ++j) s += su.at(r, j);
        row_dev = std::max(row_dev, std::abs(s - expected_row));
    }
    ck.add("standardized_row_sums", row_dev, 1e-9);

    const StatSummary mu_u = empirical_moments(su);
    const StatSummary mu_n = empirical_moments(sn);
    const double bound = 5.0 / std::sqrt(static_cast<double>(su.replicas));
    ck.add("covariance_kernel_u", inf_norm(vec_mat(Vec(su.k, 1.0), mu_u.covariance)), bound,
           "ones vector nearly in the kernel of the empirical covariance");
    ck.add("covariance_kernel_n", inf_norm(vec_mat(Vec(sn.k, 1.0), mu_n.covariance)), bound);
    ck.add("sigma_relation",
           sigma_relation_residual(mu_u.covariance, mu_n.covariance, spec.R), 0.15);
}

inline void suite_star(VerifyReport& rep, const ModelSpec& spec, const BudgetParams& bp,
                       std::uint64_t seed, unsigned threads) {
    const auto star = detect_star(spec.R);
    if (!star || spec.theta != 1.0)
        raise(Err::InapplicableSuite,
              "star limit laws hold only when theta = 1 and R is a star (then the coupled "
              "matrix is reducible); this model has an irreducible coupled matrix, so the "
              "strong law / CLT suites apply instead");
    if (star->both_central)
        raise(Err::InapplicableSuite,
              "the two-colour swap urn is excluded from the star limit laws "
              "(R = [[0,1],[1,0]] couples to the identity); use the friedman suite");
    detail::Checker ck{rep, detail::check_digest(spec, seed, rep.budget)};

    if (star->gamma == 0.0) {
        // alpha_0 = 1: deterministic reinforcement of the central colour.
        const auto cps = checkpoint_list(Schedule{Schedule::Kind::Geometric, 10.0}, bp.traj_n);
        const TrajectoryRecord rec = run_trajectory(
            spec, bp.traj_n, cps, RngStream(detail::suite_seed(seed, "star0"), 0));
        double dev = 0.0;
        for (const Snapshot& cp : rec.checkpoints) {
            dev = std::max(dev,
                           std::abs(cp.u[static_cast<std::size_t>(star->central)] -
                                    (spec.u0[static_cast<std::size_t>(star->central)] +
                                     static_cast<double>(cp.n))));
            for (int j = 0; j < spec.k(); ++j)
                if (j != star->central)
                    dev = std::max(dev, std::abs(cp.u[static_cast<std::size_t>(j)] -
                                                 spec.u0[static_cast<std::size_t>(j)]));
        }
        ck.add("degenerate_star_exact", dev, 0.0,
               "alpha_0 = 1: central mass is U_{0,0}+n and other colours never move");
        return;
    }

    const auto cps = checkpoint_list(Schedule{Schedule::Kind::Geometric, 10.0}, bp.star_n);
    const auto recs = run_ensemble(spec, bp.star_n, bp.ens_m,
                                   detail::suite_seed(seed, "star"), cps, {}, threads);
    const double u0xi = detail::u0_xi(spec, *star);

    double worst_identity = 0.0, min_w = 0.0;
    std::vector<StarDiagnostics> diags;
    diags.reserve(recs.size());
    for (const TrajectoryRecord& rec : recs) {
        diags.push_back(star_diagnostics(rec, *star));
        worst_identity = std::max(worst_identity, diags.back().identity_residual);
        for (double w : diags.back().w_n) min_w = std::min(min_w, w);
    }
    ck.add("star_identity", worst_identity, 1e-9,
           "exact pairwise identity between non-central colours");
    ck.add("star_w_nonnegative", -min_w, 0.0);

    const std::size_t ncp = cps.size();
    double worst_sigmas = 0.0;
    for (std::size_t c = 0; c < ncp; ++c) {
        double mean = 0.0;
        for (const StarDiagnostics& d : diags) mean += d.w_n[c];
        mean /= static_cast<double>(diags.size());
        double var = 0.0;
        for (const StarDiagnostics& d : diags) {
            const double dv = d.w_n[c] - mean;
            var += dv * dv;
        }
        var /= static_cast<double>(diags.size() - 1);
        const double se = std::sqrt(var / static_cast<double>(diags.size()));
        worst_sigmas = std::max(worst_sigmas, std::abs(mean - u0xi) / std::max(se, 1e-300));
    }
    ck.add("star_martingale_mean", worst_sigmas, 3.0,
           "|mean(W_n) - U0 xi| in standard errors, worst checkpoint");

    const std::vector<double> pis = pi_products(star->gamma, {bp.star_n});
    double mean_deficit = 0.0;
    for (const StarDiagnostics& d : diags) mean_deficit += 1.0 - d.central_prop.back();
    mean_deficit /= static_cast<double>(diags.size());
    const double predicted =
        star->gamma * u0xi * pis[0] / static_cast<double>(bp.star_n + 1);
    ck.add("star_central_proportion", mean_deficit, std::max(0.02, 3.0 * predicted),
           "mean 1 - U_{n,0}/(n+1) at the horizon");

    const double pi_ratio = pis[0] * std::tgamma(1.0 + star->gamma) /
                            std::pow(static_cast<double>(bp.star_n), star->gamma);
    ck.add("star_pi_gamma_product", std::abs(pi_ratio - 1.0), 0.02,
           "running product vs its Gamma-function asymptote");

    const double wbar = u0xi / std::tgamma(1.0 + star->gamma);
    if (star->gamma < 0.5) {
        const auto recs_cov =
            run_ensemble(spec, bp.ens_n, bp.cov_m, detail::suite_seed(seed, "star-cov"),
                         {bp.ens_n}, {}, threads);
        const EnsembleSample ns = ensemble_n(recs_cov, bp.ens_n);
        const double km1 = static_cast<double>(spec.k() - 1);
        const double sqn = std::sqrt(static_cast<double>(bp.ens_n));
        EnsembleSample noncentral;
        noncentral.n = ns.n;
        noncentral.replicas = ns.replicas;
        noncentral.k = ns.k - 1;
        noncentral.rows.reserve(noncentral.replicas * noncentral.k);
        double mean_central = 0.0;
        for (std::size_t r = 0; r < ns.replicas; ++r) {
            for (std::size_t j = 0; j < ns.k; ++j) {
                if (static_cast<int>(j) == star->central) {
                    mean_central += ns.at(r, j) / sqn;
                    continue;
                }
                noncentral.rows.push_back((ns.at(r, j) - static_cast<double>(bp.ens_n) / km1) /
                                          sqn);
            }
        }
        mean_central /= static_cast<double>(ns.replicas);
        const Mat expect = star_count_covariance(spec.k());
        const Mat got = empirical_moments(noncentral).covariance;
        double rel = 0.0;
        for (std::size_t i = 0; i < expect.data().size(); ++i)
            rel = std::max(rel, std::abs(got.data()[i] - expect.data()[i]) /
                                    std::abs(expect.data()[i]));
        ck.add("star_count_covariance", rel, bp.cov_entry_rel,
               "entrywise relative error vs (1/(k-1)) I - (1/(k-1)^2) J");
        const double rate = star->gamma * wbar *
                            std::pow(static_cast<double>(bp.ens_n), star->gamma - 0.5);
        ck.add("star_count_central_sqrt_n", mean_central, std::max(0.05, 3.0 * rate));
    } else if (rep.budget == Budget::Full) {
        const std::int64_t n_long = 1000000;
        const auto recs_long =
            run_ensemble(spec, n_long, 500, detail::suite_seed(seed, "star-long"), {n_long},
                         {}, threads);
        const std::vector<double> pi_long = pi_products(star->gamma, {n_long});
        const double ng = std::pow(static_cast<double>(n_long), star->gamma);
        double mean_abs = 0.0;
        for (const TrajectoryRecord& rec : recs_long) {
            const Snapshot& cp = rec.checkpoints.back();
            double uxi = 0.0;
            for (int j = 0; j < spec.k(); ++j)
                if (j != star->central) uxi += cp.u[static_cast<std::size_t>(j)];
            uxi /= star->gamma;
            const double wn = uxi / pi_long[0];
            const double n0 =
                static_cast<double>(cp.counts[static_cast<std::size_t>(star->central)]);
            mean_abs += std::abs(n0 / ng - star->gamma * wn);
        }
        mean_abs /= static_cast<double>(recs_long.size());
        ck.add("star_count_w_coupling", mean_abs, 0.05 * std::max(1.0, u0xi),
               "mean |N_{n,0}/n^gamma - ((1-alpha_0)/(k-1)) W_n| at n = 10^6");
    } else {
        rep.skipped.push_back(
            "star_count_w_coupling (gamma >= 1/2 colour-count coupling needs the full "
            "budget's n = 10^6 horizon)");
    }
}

inline void suite_friedman(VerifyReport& rep, const ModelSpec& spec, const BudgetParams& bp,
                           std::uint64_t seed, unsigned threads) {
    const auto star = detect_star(spec.R);
    const bool is_friedman = spec.k() == 2 && spec.theta == 1.0 && star && star->both_central;
    if (!is_friedman)
        raise(Err::InapplicableSuite,
              "the Beta limit holds only for the two-colour swap urn at theta = 1 "
              "(k = 2, R = [[0,1],[1,0]], coupled matrix = identity)");
    detail::Checker ck{rep, detail::check_digest(spec, seed, rep.budget)};
    const std::uint64_t m = rep.budget == Budget::Full ? 2000 : 500;
    const auto recs = run_ensemble(spec, bp.friedman_n, m,
                                   detail::suite_seed(seed, "friedman"), {bp.friedman_n}, {},
                                   threads);
    std::vector<double> u_props, n_props;
    u_props.reserve(recs.size());
    n_props.reserve(recs.size());
    for (const TrajectoryRecord& rec : recs) {
        const Snapshot& cp = rec.checkpoints.back();
        u_props.push_back(cp.u[0] / static_cast<double>(cp.n + 1));
        n_props.push_back(static_cast<double>(cp.counts[0]) / static_cast<double>(cp.n + 1));
    }
    ck.add("friedman_beta_ks", ks_statistic(u_props, beta_cdf(spec.u0[0], spec.u0[1])),
           bp.ks_tol, "U_{n,0}/(n+1) against Beta(U_{0,0}, U_{0,1})");
    ck.add("friedman_counts_beta_ks", ks_statistic(n_props, beta_cdf(spec.u0[1], spec.u0[0])),
           bp.ks_tol, "N_{n,0}/(n+1) against Beta(U_{0,1}, U_{0,0})");
}

// ---------------------------------------------------------------------------

inline VerifyReport run_verify(const ModelSpec& spec, const std::string& suite, Budget budget,
                               std::uint64_t seed, unsigned threads = 0) {
    VerifyReport rep;
    rep.suite = suite;
    rep.budget = budget;
    rep.seed = seed;
    rep.model_digest = spec.digest_hex();
    const BudgetParams bp = budget_params(budget);

    auto dispatch = [&](const std::string& name) {
        if (name == "invariants") return suite_invariants(rep, spec, bp, seed, threads);
        if (name == "slln") return suite_slln(rep, spec, bp, seed, threads);
        if (name == "clt") return suite_clt(rep, spec, bp, seed, threads);
        if (name == "counts") return suite_counts(rep, spec, bp, seed, threads);
        if (name == "star") return suite_star(rep, spec, bp, seed, threads);
        if (name == "friedman") return suite_friedman(rep, spec, bp, seed, threads);
        raise(Err::BadInput, "unknown suite " + name);
    };

    if (suite != "all") {
        dispatch(suite);
        return rep;
    }
    suite_invariants(rep, spec, bp, seed, threads);
    for (const char* name : {"slln", "clt", "counts", "star", "friedman"}) {
        try {
            dispatch(name);
        } catch (const UrnError& e) {
            if (e.code() != Err::InapplicableSuite) throw;
            rep.skipped.push_back(std::string(name) + ": " + e.what());
        }
    }
    return rep;
}

inline json verify_report_json(const VerifyReport& rep) {
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
        json jc{{"name", c.name},
                {"inputs_digest", c.inputs_digest},
                {"statistic", c.statistic},
                {"threshold", c.threshold},
                {"pass", c.pass}};
        if (!c.note.empty()) jc["note"] = c.note;
        checks.push_back(std::move(jc));
    }
    int failed = 0;
    for (const CheckResult& c : rep.checks)
        if (!c.pass) ++failed;
    return json{{"schema", kSchemaTag},
                {"command", "verify"},
                {"suite", rep.suite},
                {"budget", budget_name(rep.budget)},
                {"seed", rep.seed},
                {"model_digest", rep.model_digest},
                {"checks", checks},
                {"skipped", rep.skipped},
                {"failed", failed},
                {"all_pass", rep.all_pass()}};
}

}  // namespace urnlab
