#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "screwspec/errors.hpp"
#include "screwspec/quadrature.hpp"

using namespace screwspec;

TEST_CASE("Gauss-Laguerre integrates Gamma moments exactly") {
    for (double alpha : {0.0, 0.5, 1.6007810593582121, -0.25}) {
        const auto rule = quad::gauss_laguerre(12, alpha);
        double zeroth = 0.0, first = 0.0, fifth = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            zeroth += rule.weights[i];
            first += rule.weights[i] * rule.nodes[i];
            fifth += rule.weights[i] * std::pow(rule.nodes[i], 5);
        }
        CHECK(zeroth == doctest::Approx(std::tgamma(alpha + 1.0)).epsilon(1e-12));
        CHECK(first == doctest::Approx(std::tgamma(alpha + 2.0)).epsilon(1e-12));
        CHECK(fifth == doctest::Approx(std::tgamma(alpha + 6.0)).epsilon(1e-11));
    }
}

TEST_CASE("Gauss-Laguerre nodes are positive and ascending") {
    const auto rule = quad::gauss_laguerre(32, 0.75);
    CHECK(rule.nodes.front() > 0.0);
    for (std::size_t i = 1; i < rule.nodes.size(); ++i) {
        CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
    for (double w : rule.weights) CHECK(w > 0.0);
}

TEST_CASE("Gauss-Laguerre rejects invalid parameters") {
    CHECK_THROWS_AS(quad::gauss_laguerre(0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(quad::gauss_laguerre(4, -1.0), std::invalid_argument);
}

TEST_CASE("adaptive Simpson on smooth integrands") {
    const double third = quad::adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(third == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    const double two =
        quad::adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12);
    CHECK(two == doctest::Approx(2.0).epsilon(1e-11));

    const double gauss = quad::adaptive_simpson(
        [](double x) { return std::exp(-x * x); }, 0.0, 8.0, 1e-13);
    CHECK(gauss == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("adaptive Simpson argument checks") {
    CHECK(quad::adaptive_simpson([](double) { return 1.0; }, 2.0, 2.0, 1e-10) == 0.0);
    CHECK_THROWS_AS(quad::adaptive_simpson([](double) { return 1.0; }, 0.0, 1.0, 0.0),
                    std::invalid_argument);
}
