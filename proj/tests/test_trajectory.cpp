#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "urnlab/csv.hpp"
#include "urnlab/trajectory.hpp"

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

ModelSpec k3_spec(double theta = 1.0) {
    return validate_model(3, theta, mat_of({{.5, .25, .25}, {.125, .75, .125}, {0, .5, .5}}),
                          Vec{.25, .25, .5});
}

}  // namespace

TEST_CASE("checkpoint schedules") {
    SECTION("geometric:2 over 1000 steps") {
        const auto cps = checkpoint_list(parse_schedule("geometric:2"), 1000);
        CHECK(cps == std::vector<std::int64_t>{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1000});
    }
    SECTION("geometric:10 always ends at the horizon") {
        const auto cps = checkpoint_list(parse_schedule("geometric:10"), 100000);
        CHECK(cps == std::vector<std::int64_t>{1, 10, 100, 1000, 10000, 100000});
    }
    SECTION("linear:250") {
        const auto cps = checkpoint_list(parse_schedule("linear:250"), 1000);
        CHECK(cps == std::vector<std::int64_t>{250, 500, 750, 1000});
        const auto cps2 = checkpoint_list(parse_schedule("linear:300"), 1000);
        CHECK(cps2 == std::vector<std::int64_t>{300, 600, 900, 1000});
    }
    SECTION("bad schedules are rejected") {
        CHECK_THROWS_AS(parse_schedule("fibonacci:3"), UrnError);
        CHECK_THROWS_AS(parse_schedule("geometric:1"), UrnError);
        CHECK_THROWS_AS(parse_schedule("linear:"), UrnError);
        CHECK_THROWS_AS(parse_schedule("linear"), UrnError);
    }
}

TEST_CASE("run_trajectory") {
    const ModelSpec s = k3_spec();
    SECTION("empty checkpoint list means no snapshots") {
        const auto rec = run_trajectory(s, 100, {}, RngStream(1, 0));
        CHECK(rec.checkpoints.empty());
        CHECK(rec.horizon == 100);
    }
    SECTION("same seed twice gives identical records") {
        RunOptions opts;
        opts.record_draws = true;
        const auto a = run_trajectory(s, 5000, {1, 10, 100, 5000}, RngStream(42, 7), opts);
        const auto b = run_trajectory(s, 5000, {1, 10, 100, 5000}, RngStream(42, 7), opts);
        CHECK(a == b);
    }
    SECTION("snapshot proportions sum to one") {
        const auto rec = run_trajectory(s, 2000, {1, 2000}, RngStream(9, 0));
        for (const Snapshot& cp : rec.checkpoints) {
            CHECK(std::abs(sum(cp.u_proportions()) - 1.0) < 1e-9);
            if (cp.n > 0) CHECK(std::abs(sum(cp.count_proportions()) - 1.0) < 1e-12);
        }
    }
    SECTION("checkpoints must be increasing and inside [1, horizon]") {
        CHECK_THROWS_AS(run_trajectory(s, 10, {0, 5}, RngStream(1, 0)), UrnError);
        CHECK_THROWS_AS(run_trajectory(s, 10, {5, 5}, RngStream(1, 0)), UrnError);
        CHECK_THROWS_AS(run_trajectory(s, 10, {11}, RngStream(1, 0)), UrnError);
    }
    SECTION("identity replacement with de-preferential draws balances out") {
        const ModelSpec id = validate_model(2, 1.0, mat_of({{1, 0}, {0, 1}}), Vec{1.0, 0.0});
        const auto rec = run_trajectory(id, 100000, {100000}, RngStream(2, 0));
        CHECK(inf_norm_diff(rec.checkpoints.back().u_proportions(), Vec{0.5, 0.5}) < 0.02);
    }
}

TEST_CASE("run_ensemble") {
    const ModelSpec s = k3_spec(1.1);
    SECTION("one replica matches run_trajectory with replica index 0") {
        const auto ens = run_ensemble(s, 1000, 1, 99, {1000});
        const auto solo = run_trajectory(s, 1000, {1000}, RngStream(99, 0));
        CHECK(ens.size() == 1);
        CHECK(ens[0] == solo);
    }
    SECTION("records are replica-ordered and independent of thread count") {
        const auto one = run_ensemble(s, 500, 16, 4242, {500}, {}, 1);
        const auto two = run_ensemble(s, 500, 16, 4242, {500}, {}, 2);
        const auto four = run_ensemble(s, 500, 16, 4242, {500}, {}, 4);
        REQUIRE(one.size() == 16);
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(one[i].replica_index == i);
            CHECK(one[i] == two[i]);
            CHECK(one[i] == four[i]);
        }
    }
    SECTION("replica_base shifts the streams") {
        const auto base0 = run_ensemble(s, 200, 4, 7, {200}, {}, 1, 0);
        const auto base2 = run_ensemble(s, 200, 4, 7, {200}, {}, 1, 2);
        CHECK(base2[0] == base0[2]);
        CHECK(base2[1] == base0[3]);
    }
}

TEST_CASE("coupling_residual") {
    SECTION("needs the draw history") {
        const ModelSpec s = k3_spec();
        const auto rec = run_trajectory(s, 100, {100}, RngStream(1, 0));
        CHECK_THROWS_MATCHES(coupling_residual(rec, s), UrnError,
                             Catch::Matchers::Predicate<UrnError>([](const UrnError& e) {
                                 return e.code() == Err::MissingHistory;
                             }));
    }
    SECTION("k=2 swap at theta=1: the coupled urn is the swapped urn") {
        const ModelSpec s =
            validate_model(2, 1.0, mat_of({{0, 1}, {1, 0}}), Vec{0.5, 0.5});
        RunOptions opts;
        opts.record_draws = true;
        const auto rec = run_trajectory(s, 10000, {10, 5000, 10000}, RngStream(6, 0), opts);
        CHECK(coupling_residual(rec, s) <= 1e-8 * 10001.0);
        // Directly: U-hat = U A with A the swap, so U-hat is U reversed.
        const Snapshot& cp = rec.checkpoints.back();
        const Vec uhat = vec_mat(cp.u, selection_operator(2, 1.0).entries);
        CHECK(uhat[0] == cp.u[1]);
        CHECK(uhat[1] == cp.u[0]);
    }
    SECTION("generic k=3 model stays within the contract") {
        const ModelSpec s = k3_spec(1.3);
        RunOptions opts;
        opts.record_draws = true;
        const auto rec =
            run_trajectory(s, 10000, {1, 100, 10000}, RngStream(2025, 1), opts);
        CHECK(coupling_residual(rec, s) <= 1e-8 * 10001.0);
    }
}

TEST_CASE("trajectory CSV") {
    const ModelSpec s = k3_spec();
    RunOptions opts;
    const auto recs = run_ensemble(s, 1000, 3, 123, {1, 10, 1000}, opts, 1);

    std::ostringstream os;
    write_trajectory_csv(os, recs, s.k());
    const std::string text = os.str();

    SECTION("header and shape") {
        CHECK(text.rfind("replica,n,U_0,U_1,U_2,N_0,N_1,N_2\n", 0) == 0);
        std::size_t lines = 0;
        for (char c : text)
            if (c == '\n') ++lines;
        CHECK(lines == 1 + 3 * 3);
    }
    SECTION("round-trip is bit exact") {
        std::istringstream is(text);
        const auto rows = read_trajectory_csv(is);
        REQUIRE(rows.size() == 9);
        std::size_t idx = 0;
        for (const auto& rec : recs)
            for (const auto& cp : rec.checkpoints) {
                CHECK(rows[idx].replica == rec.replica_index);
                CHECK(rows[idx].n == cp.n);
                CHECK(rows[idx].u == cp.u);
                CHECK(rows[idx].counts == cp.counts);
                ++idx;
            }
    }
    SECTION("writing twice yields identical bytes") {
        std::ostringstream os2;
        write_trajectory_csv(os2, recs, s.k());
        CHECK(os.str() == os2.str());
    }
}
