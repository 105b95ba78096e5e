#include "doctest.h"
#include "treepat/errors.hpp"
#include "treepat/numerics.hpp"

#include <cmath>

using namespace treepat;

TEST_CASE("lambda_3 is the golden ratio") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(lambda_n(3) - phi) < 1e-12);
}

TEST_CASE("lambda_4 matches the reported approximation") {
    CHECK(lambda_n(4) == doctest::Approx(1.3953).epsilon(1e-4));
}

TEST_CASE("defining residual and monotonicity up to 64") {
    double prev = 0.0;
    for (int n = 3; n <= 64; ++n) {
        double l = lambda_n(n);
        double r = 1.0;
        for (int i = 0; i < n; ++i) r *= l;
        r -= 2.0 * l + 1.0;
        CHECK(std::abs(r) < 1e-12);
        if (n > 3) CHECK(l < prev);
        // lambda_n^n = 2 lambda_n + 1 < 4 holds from n = 4 on; the n = 3 root
        // is the golden ratio, whose cube 2*phi+1 = 4.236 sits above 4.
        if (n >= 4) CHECK(std::pow(4.0, 1.0 / n) > l);
        prev = l;
    }
    CHECK(std::pow(4.0, 1.0 / 3.0) < lambda_n(3));
}

TEST_CASE("(lambda_k)^k is decreasing") {
    for (int k = 3; k < 64; ++k)
        CHECK(2 * lambda_n(k) + 1 > 2 * lambda_n(k + 1) + 1);
}

TEST_CASE("spectral radius on known matrices") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(spectral_radius({{1, 1}, {1, 0}}) == doctest::Approx(phi).epsilon(1e-9));
    CHECK(spectral_radius({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1.0);
    CHECK(spectral_radius({{0, 1}, {0, 0}}) == 0.0);
    // imprimitive two-cycle with weights: rho = 2
    CHECK(spectral_radius({{0.0, 1.0}, {4.0, 0.0}}) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK_THROWS_AS(spectral_radius({{-1.0}}), DomainError);
}

TEST_CASE("reducible floor values") {
    CHECK(reducible_floor(6) == doctest::Approx(0.240606).epsilon(1e-5));
    CHECK(reducible_floor(8) == doctest::Approx(std::log(lambda_n(4)) / 2).epsilon(1e-12));
    CHECK(reducible_floor(9) == doctest::Approx(std::log(lambda_n(3)) / 3).epsilon(1e-12));
    CHECK_THROWS_AS(reducible_floor(7), DomainError);
    CHECK_THROWS_AS(reducible_floor(4), DomainError);
}

TEST_CASE("least prime factor") {
    CHECK(least_prime_factor(6) == 2);
    CHECK(least_prime_factor(9) == 3);
    CHECK(least_prime_factor(35) == 5);
    CHECK(least_prime_factor(13) == 13);
}
