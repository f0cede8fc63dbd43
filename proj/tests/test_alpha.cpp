#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "randfa/alpha.hpp"
#include "randfa/errors.hpp"

using namespace randfa;

TEST_CASE("error cases") {
    CHECK_THROWS_AS(solve_alpha(1), no_positive_root);
    CHECK_THROWS_AS(solve_alpha(0), invalid_parameter);
    CHECK_THROWS_AS(solve_alpha(-3), invalid_parameter);
    CHECK_THROWS_AS(lambert_w_check(1), no_positive_root);
}

TEST_CASE("alpha_2 rounds to 0.7968") {
    auto result = solve_alpha(2);
    CHECK(std::nearbyint(result.alpha * 1e4) / 1e4 == doctest::Approx(0.7968).epsilon(1e-12));
    CHECK(result.residual <= 1e-12);
}

TEST_CASE("k=8 against the bisection oracle") {
    auto result = solve_alpha(8);
    CHECK(std::abs(result.alpha - oracles::bisect_alpha(8)) <= 1e-12);
    CHECK(result.alpha > solve_alpha(7).alpha);
    CHECK(result.residual <= 1e-12);
}

TEST_CASE("residual and monotonicity for k in [2, 64]") {
    // alpha_k = 1 - Theta(e^-k) saturates to exactly 1.0 in double precision
    // once 1 - alpha_k < 0.5 ulp (k >= 37), so strict inequalities are only
    // resolvable below that point; beyond it we assert the non-strict versions.
    constexpr int last_resolvable_k = 36;
    double prev = 0.0;
    for (int k = 2; k <= 64; ++k) {
        auto result = solve_alpha(k);
        CHECK(result.alpha > 0.0);
        CHECK(result.alpha <= 1.0);
        CHECK(result.residual <= 1e-12);
        if (k <= last_resolvable_k) {
            CHECK(result.alpha < 1.0);
            CHECK(result.alpha > prev);
        } else {
            CHECK(result.alpha >= prev);
        }
        prev = result.alpha;
    }
}

TEST_CASE("two-route agreement (Newton vs Lambert W)") {
    for (int k = 2; k <= 64; ++k)
        CHECK(std::abs(solve_alpha(k).alpha - lambert_w_check(k)) <= 1e-10);
}

TEST_CASE("alpha_k approaches 1") {
    CHECK(std::abs(lambert_w_check(50) - 1.0) <= 1e-6);
    CHECK(std::abs(solve_alpha(50).alpha - 1.0) <= 1e-6);
}
