#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "screwspec/params.hpp"

using namespace screwspec;

TEST_CASE("effective angular index") {
    SystemParams p;
    p.beta = 0.5;
    p.wave_number = 0.5;
    CHECK(effective_angular_index(p, {0, 1}) == 0.75);

    p.beta = 0.0;
    p.wave_number = 123.456;
    CHECK(effective_angular_index(p, {0, 0}) == 0.0);

    p.beta = 4.0;
    p.wave_number = 0.5;
    CHECK(effective_angular_index(p, {0, 2}) == 0.0);  // exact cancellation ell = beta k
}

TEST_CASE("effective magnetic field") {
    SystemParams p;
    p.quadrupole = 1.0;
    p.lambda = 1.0;
    CHECK(effective_magnetic_field(p) == 2.0);
    p.lambda = 0.0;
    CHECK(effective_magnetic_field(p) == 0.0);
    p.quadrupole = 2.0;
    p.lambda = 0.5;
    CHECK(effective_magnetic_field(p) == 2.0);
}

TEST_CASE("effective frequency squared") {
    SystemParams p;  // m = M = lambda = 1
    CHECK(effective_frequency_sq(p) == 1.0);
    p.omega = 20.0;
    CHECK(effective_frequency_sq(p) == 41.0);

    // Reality boundary: omega = -1/2 is exactly zero, below it throws.
    p.omega = -0.5;
    CHECK(effective_frequency_sq(p) == 0.0);
    p.omega = -0.5000001;
    CHECK_THROWS_AS(effective_frequency_sq(p), NegativeDiscriminant);
    try {
        effective_frequency_sq(p);
    } catch (const NegativeDiscriminant& e) {
        CHECK(e.value < 0.0);  // offending value is carried along
    }

    p.omega = 0.0;
    CHECK(effective_frequency_sq(p, {1.5, 0, 0}) == 4.0);  // + 2 m c1
}

TEST_CASE("structural invariants are rejected") {
    SystemParams p;
    p.mass = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.quadrupole = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.beta = -0.1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    PotentialParams v;
    v.c1 = -1e-12;
    CHECK_THROWS_AS(v.validate(), std::invalid_argument);
    v = {};
    v.c2 = -2.0;
    CHECK_THROWS_AS(v.validate(), std::invalid_argument);

    QuantumNumbers q{-1, 0};
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    CHECK_NOTHROW(QuantumNumbers{0, -7}.validate());
}

TEST_CASE("angular index is linear in ell and beta separately") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> beta_d(0.0, 3.0), k_d(-3.0, 3.0);
    std::uniform_int_distribution<int> ell_d(-6, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        SystemParams p;
        p.beta = beta_d(rng);
        p.wave_number = k_d(rng);
        const int la = ell_d(rng), lb = ell_d(rng);
        const double fa = effective_angular_index(p, {0, la});
        const double fb = effective_angular_index(p, {0, lb});
        const double fsum = effective_angular_index(p, {0, la + lb});
        const double f0 = effective_angular_index(p, {0, 0});
        CHECK(fa + fb == doctest::Approx(fsum + f0).epsilon(1e-14));

        SystemParams p2 = p;
        const double b1 = beta_d(rng), b2 = beta_d(rng);
        p2.beta = b1;
        const double g1 = effective_angular_index(p2, {0, 0});
        p2.beta = b2;
        const double g2 = effective_angular_index(p2, {0, 0});
        p2.beta = b1 + b2;
        const double gsum = effective_angular_index(p2, {0, 0});
        CHECK(g1 + g2 == doctest::Approx(gsum).epsilon(1e-13));
    }
}

TEST_CASE("frequency squared is affine in omega with slope 2 m M lambda") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> par_d(0.25, 2.5), omega_d(0.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        SystemParams p;
        p.mass = par_d(rng);
        p.quadrupole = par_d(rng);
        p.lambda = par_d(rng);
        p.omega = omega_d(rng);
        const double h = 0.5;
        SystemParams ph = p;
        ph.omega += h;
        const double slope = (effective_frequency_sq(ph) - effective_frequency_sq(p)) / h;
        CHECK(slope ==
              doctest::Approx(2.0 * p.mass * p.quadrupole * p.lambda).epsilon(1e-11));
    }
}

TEST_CASE("lambda flip mirrors the field and the reality domain") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> par_d(0.25, 2.5), omega_d(-5.0, 5.0);
    for (int trial = 0; trial < 1000; ++trial) {
        SystemParams p;
        p.mass = par_d(rng);
        p.quadrupole = par_d(rng);
        p.lambda = par_d(rng);
        p.omega = omega_d(rng);
        SystemParams flipped = p;
        flipped.lambda = -p.lambda;
        flipped.omega = -p.omega;
        CHECK(effective_magnetic_field(flipped) == -effective_magnetic_field(p));

        // The reality domain is identical under the joint flip.
        const double ml = p.quadrupole * p.lambda;
        const bool valid = ml * ml + 2.0 * p.mass * ml * p.omega >= 0.0;
        if (valid) {
            CHECK(effective_frequency_sq(flipped) == effective_frequency_sq(p));
        } else {
            CHECK_THROWS_AS(effective_frequency_sq(p), NegativeDiscriminant);
            CHECK_THROWS_AS(effective_frequency_sq(flipped), NegativeDiscriminant);
        }
    }
}
