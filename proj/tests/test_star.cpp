#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "urnlab/star.hpp"

using namespace urnlab;

namespace {

Mat mat_of(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t n = rows.size();
    Mat m(n, rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (double x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

ModelSpec star_spec() {
    // k=3, alpha = (0, 1/2, 1/2), gamma = 1/2
    return validate_model(3, 1.0, mat_of({{0, .5, .5}, {1, 0, 0}, {1, 0, 0}}),
                          Vec{.5, .25, .25});
}

}  // namespace

TEST_CASE("star_count_covariance") {
    SECTION("k=3") {
        CHECK(max_abs_diff(star_count_covariance(3), mat_of({{.25, -.25}, {-.25, .25}})) <
              1e-15);
    }
    SECTION("k=5: diagonal 3/16, off-diagonal -1/16") {
        const Mat m = star_count_covariance(5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(m(i, j) - (i == j ? 3.0 / 16 : -1.0 / 16)) < 1e-15);
    }
    SECTION("rows sum to zero for every k") {
        for (int k = 2; k <= 9; ++k) {
            const Mat m = star_count_covariance(k);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                double s = 0.0;
                for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j);
                CHECK(std::abs(s) < 1e-14);
            }
        }
    }
}

TEST_CASE("pi_products against the exact Gamma-ratio formula") {
    // prod_{i<=n} (1 + g/i) = Gamma(n+1+g) / (Gamma(n+1) Gamma(1+g))
    for (double g : {0.25, 0.5, 0.9}) {
        const std::vector<std::int64_t> ns{1, 2, 10, 1000, 100000};
        const auto pis = pi_products(g, ns);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            const double n = static_cast<double>(ns[i]);
            const double exact =
                std::exp(std::lgamma(n + 1.0 + g) - std::lgamma(n + 1.0) - std::lgamma(1.0 + g));
            CHECK(std::abs(pis[i] / exact - 1.0) < 1e-10);
        }
        // and the asymptote Pi_n ~ n^g / Gamma(1+g) is within 2% by n = 1e5
        const double asym = std::pow(1e5, g) / std::tgamma(1.0 + g);
        CHECK(std::abs(pis.back() / asym - 1.0) < 0.02);
    }
}

TEST_CASE("star_diagnostics on one trajectory") {
    const ModelSpec s = star_spec();
    const auto star = detect_star(s.R);
    REQUIRE(star.has_value());
    REQUIRE(star->gamma == 0.5);

    const auto rec =
        run_trajectory(s, 20000, {1, 10, 100, 1000, 20000}, RngStream(2718, 0));
    const StarDiagnostics d = star_diagnostics(rec, *star);

    SECTION("xi is (1/gamma) on non-central colours") {
        CHECK(d.xi == Vec{0.0, 2.0, 2.0});
    }
    SECTION("the pairwise identity holds exactly for dyadic alpha") {
        CHECK(d.identity_residual == 0.0);
    }
    SECTION("W_n is nonnegative and central proportion climbs") {
        for (double w : d.w_n) CHECK(w >= 0.0);
        CHECK(d.central_prop.back() > d.central_prop.front());
        CHECK(d.central_prop.back() > 0.9);
    }
    SECTION("W_0-scale sanity: first checkpoint near U0 xi") {
        // at n=1 the martingale can have moved at most one replacement's worth
        CHECK(d.w_n.front() >= 0.0);
        CHECK(d.w_n.front() < 3.0);
    }
}

TEST_CASE("star_diagnostics ensemble means are martingale-flat") {
    const ModelSpec s = star_spec();
    const auto star = detect_star(s.R);
    const double u0xi = 2.0 * (s.u0[1] + s.u0[2]);  // = 1 for this fixture
    REQUIRE(u0xi == 1.0);

    const std::vector<std::int64_t> cps{10, 100, 1000, 10000};
    const auto recs = run_ensemble(s, 10000, 400, 1111, cps, {}, 2);
    for (std::size_t c = 0; c < cps.size(); ++c) {
        double mean = 0.0, var = 0.0;
        std::vector<double> ws;
        for (const auto& rec : recs) {
            const StarDiagnostics d = star_diagnostics(rec, *star);
            ws.push_back(d.w_n[c]);
            mean += d.w_n[c];
        }
        mean /= static_cast<double>(ws.size());
        for (double w : ws) var += (w - mean) * (w - mean);
        var /= static_cast<double>(ws.size() - 1);
        const double se = std::sqrt(var / static_cast<double>(ws.size()));
        CHECK(std::abs(mean - u0xi) <= 4.0 * se);  // E[W_n] = U0 xi at every n
    }
}

TEST_CASE("star_diagnostics errors") {
    const ModelSpec s = star_spec();
    const auto rec = run_trajectory(s, 100, {100}, RngStream(4, 0));
    SECTION("gamma = 0 is degenerate") {
        StarInfo deg;
        deg.central = 0;
        deg.alpha = Vec{1.0, 0.0, 0.0};
        deg.gamma = 0.0;
        CHECK_THROWS_MATCHES(star_diagnostics(rec, deg), UrnError,
                             Catch::Matchers::Predicate<UrnError>([](const UrnError& e) {
                                 return e.code() == Err::GammaZero;
                             }));
    }
    SECTION("mismatched star info") {
        StarInfo wrong;
        wrong.central = 0;
        wrong.alpha = Vec{0.0, 1.0};
        wrong.gamma = 1.0;
        CHECK_THROWS_MATCHES(star_diagnostics(rec, wrong), UrnError,
                             Catch::Matchers::Predicate<UrnError>([](const UrnError& e) {
                                 return e.code() == Err::NotAStar;
                             }));
    }
}
