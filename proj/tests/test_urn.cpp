#include <catch2/catch_amalgamated.hpp>

#include "urnlab/selection.hpp"
#include "urnlab/urn.hpp"

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

}  // namespace

TEST_CASE("init_state") {
    const ModelSpec s = validate_model(2, 1.0, mat_of({{0, 1}, {1, 0}}), Vec{0.5, 0.5});
    const UrnState st = init_state(s);
    CHECK(st.n == 0);
    CHECK(sum(st.u) == 1.0);
    CHECK(st.counts == std::vector<std::int64_t>{0, 0});
    CHECK(st.last_draw == -1);
}

TEST_CASE("selection_distribution") {
    SECTION("degenerate U0 = (1,0,0), theta=1 gives (0, 1/2, 1/2)") {
        const ModelSpec s = validate_model(3, 1.0, mat_of({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
                                           Vec{1.0, 0.0, 0.0});
        CHECK(selection_distribution(init_state(s), s) == Vec{0.0, 0.5, 0.5});
    }
    SECTION("k=2 theta=1 swaps the proportions") {
        const ModelSpec s =
            validate_model(2, 1.0, mat_of({{0, 1}, {1, 0}}), Vec{0.8, 0.2});
        const Vec p = selection_distribution(init_state(s), s);
        CHECK(std::abs(p[0] - 0.2) < 1e-15);
        CHECK(std::abs(p[1] - 0.8) < 1e-15);
    }
    SECTION("uniform proportions are a fixed point") {
        for (double theta : {1.0, 1.7}) {
            const ModelSpec s = validate_model(
                3, theta, mat_of({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), Vec(3, 1.0 / 3));
            const Vec p = selection_distribution(init_state(s), s);
            CHECK(inf_norm_diff(p, Vec(3, 1.0 / 3)) < 1e-15);
        }
    }
    SECTION("closed form agrees with (U/(n+1)) A along a trajectory") {
        const ModelSpec s = validate_model(
            3, 1.3, mat_of({{.2, .3, .5}, {.6, .1, .3}, {.25, .5, .25}}), Vec{.4, .35, .25});
        const Mat a = selection_operator(3, 1.3).entries;
        RngStream rng(5, 0);
        UrnState st = init_state(s);
        for (int i = 0; i < 500; ++i) {
            const Vec p = selection_distribution(st, s);
            CHECK(std::abs(sum(p) - 1.0) < 1e-12);
            Vec props(3);
            for (int j = 0; j < 3; ++j) props[j] = st.u[j] / static_cast<double>(st.n + 1);
            CHECK(inf_norm_diff(p, vec_mat(props, a)) < 1e-12);
            step(st, s, rng);
        }
    }
}

TEST_CASE("step") {
    SECTION("forced draw when one colour holds all mass") {
        // U = (1,0), theta=1: p = (0,1), so colour 1 is drawn surely and its
        // replacement row (1,0) is added.
        const ModelSpec s = validate_model(2, 1.0, mat_of({{0, 1}, {1, 0}}), Vec{1.0, 0.0});
        UrnState st = init_state(s);
        RngStream rng(11, 0);
        const int z = step(st, s, rng);
        CHECK(z == 1);
        CHECK(st.u == Vec{2.0, 0.0});
        CHECK(st.counts == std::vector<std::int64_t>{0, 1});
        CHECK(st.n == 1);
        CHECK(st.last_draw == 1);
    }
    SECTION("inverse-CDF convention: u = 0 selects the first positive colour") {
        const ModelSpec s =
            validate_model(2, 1.0, mat_of({{0, 1}, {1, 0}}), Vec{0.25, 0.75});
        const UrnState st = init_state(s);
        CHECK(draw_from_uniform(st, s, 0.0) == 0);  // p0 = 0.75 > 0
        CHECK(draw_from_uniform(st, s, 0.9999999999) == 1);
        // and with zero mass on colour 0, u = 0 falls through to colour 1
        const ModelSpec s2 = validate_model(2, 1.0, mat_of({{0, 1}, {1, 0}}), Vec{1.0, 0.0});
        CHECK(draw_from_uniform(init_state(s2), s2, 0.0) == 1);
    }
    SECTION("degenerate star alpha_0 = 1: central mass grows by exactly one") {
        const ModelSpec s = validate_model(2, 1.0, mat_of({{1, 0}, {1, 0}}), Vec{0.25, 0.75});
        UrnState st = init_state(s);
        RngStream rng(3, 0);
        for (int i = 1; i <= 5000; ++i) {
            step(st, s, rng);
            REQUIRE(st.u[0] == 0.25 + static_cast<double>(i));  // exact, α is integral
            REQUIRE(st.u[1] == 0.75);
        }
    }
    SECTION("state invariants hold along a generic trajectory") {
        const ModelSpec s = validate_model(
            3, 1.0, mat_of({{.2, .3, .5}, {.6, .1, .3}, {.25, .5, .25}}), Vec{.3, .3, .4});
        UrnState st = init_state(s);
        RngStream rng(17, 4);
        for (int i = 0; i < 20000; ++i) {
            step(st, s, rng);
            if (i % 500 == 0) check_state_invariants(st, s);
        }
        check_state_invariants(st, s);
        std::int64_t total = 0;
        for (std::int64_t c : st.counts) total += c;
        CHECK(total == st.n);
    }
}
