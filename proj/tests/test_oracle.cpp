#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "screwspec/oracle.hpp"
#include "screwspec/spectrum.hpp"
#include "screwspec/validation.hpp"

using namespace screwspec;

namespace {

SystemParams base(double beta = 0.5, double omega = 0.0) {
    SystemParams p;
    p.wave_number = 0.5;
    p.beta = beta;
    p.omega = omega;
    return p;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("free oscillator limit: E0 = 1 with gap 2") {
    SystemParams p;
    p.wave_number = 0.0;
    p.beta = 0.0;
    p.omega = 0.0;
    OracleConfig cfg;
    cfg.grid_points = 2000;
    cfg.eigs_requested = 4;
    const OracleSpectrum s = solve_radial(p, {}, 1, cfg);
    for (int n = 0; n <= 3; ++n) {
        CHECK(s.eigenvalues[n] == doctest::Approx(1.0 + 2.0 * n).epsilon(1e-6));
    }
    for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
        CHECK(s.eigenvalues[i] > s.eigenvalues[i - 1]);
    }
    for (double est : s.richardson_error) CHECK(std::isfinite(est));
}

TEST_CASE("base configuration matches the closed form to 1e-6") {
    const SystemParams p = base(0.5, 20.0);
    OracleConfig cfg;
    cfg.eigs_requested = 4;
    const OracleSpectrum s = solve_radial(p, {}, 1, cfg);
    for (int n = 0; n <= 3; ++n) {
        const double closed = energy_free(p, {n, 1}).energy;
        CHECK(std::abs(s.eigenvalues[n] - closed) / std::abs(closed) < 1e-6);
    }
}

TEST_CASE("pseudo-harmonic ground state is pinned to zero at its threshold") {
    const SystemParams p = base(0.5, 26.41);
    OracleConfig cfg;
    cfg.eigs_requested = 1;
    const OracleSpectrum s = solve_radial(p, {1, 1, 1}, 1, cfg);
    CHECK(std::abs(s.eigenvalues[0]) < 5e-3);
}

TEST_CASE("second-order convergence under dyadic refinement") {
    for (const PotentialParams v : {PotentialParams{}, PotentialParams{1, 1, 1}}) {
        const SystemParams p = base(0.5, 20.0);
        const double wsq = effective_frequency_sq(p, v);
        const double rho_max = 10.0 / std::pow(wsq, 0.25);
        const double closed = energy_pseudoharmonic(p, v, {0, 1}).energy;
        std::vector<double> log_h, log_err;
        for (int n : {500, 1000, 2000}) {
            const double e = solve_radial_raw(p, v, 1, rho_max, n, 1)[0];
            log_h.push_back(std::log(rho_max / (n + 1)));
            log_err.push_back(std::log(std::abs(e - closed)));
        }
        const double slope = (log_err.front() - log_err.back()) /
                             (log_h.front() - log_h.back());
        CHECK(slope == doctest::Approx(2.0).epsilon(0.1));
    }
}

TEST_CASE("Sturm oscillation: state j has j interior nodes") {
    const SystemParams p = base(0.5, 20.0);
    OracleConfig cfg;
    cfg.grid_points = 1500;
    for (int state = 0; state <= 3; ++state) {
        const RadialMode mode = solve_radial_mode(p, {1, 1, 1}, 1, state, cfg);
        CHECK(count_nodes(mode.u) == state);
        CHECK(mode.energy ==
              doctest::Approx(energy_pseudoharmonic(p, {1, 1, 1}, {state, 1}).energy)
                  .epsilon(1e-4));
    }
}

TEST_CASE("reality violation and config validation") {
    SystemParams p = base(0.5, -30.0);
    CHECK_THROWS_AS(solve_radial(p, {}, 1), NegativeDiscriminant);

    OracleConfig bad;
    bad.grid_points = 100;
    CHECK_THROWS_AS(solve_radial(base(), {}, 1, bad), std::invalid_argument);
    bad = {};
    bad.eigs_requested = 0;
    CHECK_THROWS_AS(solve_radial(base(), {}, 1, bad), std::invalid_argument);
}

TEST_CASE("clipped domains raise TruncationTooSmall") {
    const SystemParams p = base(0.5, 20.0);
    OracleConfig cfg;
    cfg.grid_points = 400;

    cfg.rho_max = 1.0;  // below 3/sqrt(width), rejected outright
    CHECK_THROWS_AS(solve_radial(p, {}, 1, cfg), TruncationTooSmall);

    cfg.rho_max = 1.3;  // passes the coarse bound but clips the ground state
    CHECK_THROWS_AS(solve_radial(p, {}, 1, cfg), TruncationTooSmall);

    cfg.rho_max = 4.0;
    CHECK_NOTHROW(solve_radial(p, {}, 1, cfg));
}

TEST_CASE("validate_closed_forms isolates failed preconditions") {
    std::vector<GridEntry> grid;
    grid.push_back({base(0.5, 20.0), {}, 1});
    grid.push_back({base(0.5, -30.0), {}, 1});  // reality violated
    grid.push_back({base(0.0, 20.0), {1, 0, 0}, 1});
    OracleConfig cfg;
    cfg.grid_points = 1000;
    const OracleValidation report = validate_closed_forms(grid, 1e-5, 3, cfg);
    REQUIRE(report.entries.size() == 3);
    CHECK(report.entries[0].status == EntryStatus::ok);
    CHECK(report.entries[1].status == EntryStatus::failed_precondition);
    CHECK(report.entries[2].status == EntryStatus::ok);
    CHECK(!report.all_ok());

    const std::vector<GridEntry> empty;
    CHECK_THROWS_AS(validate_closed_forms(empty, 1e-5, 3, cfg), std::invalid_argument);
}

TEST_CASE("eigensolver sources stay independent of the closed forms") {
    // The whole point of the oracle is cross-validation: its translation unit
    // must not include the closed-form spectrum or wavefunction headers.
    for (const char* file : {"/include/screwspec/oracle.hpp", "/src/oracle.cpp",
                             "/include/screwspec/tridiag.hpp", "/src/tridiag.cpp"}) {
        const std::string text = slurp(std::string(SCREWSPEC_SOURCE_DIR) + file);
        CHECK(text.find("spectrum.hpp") == std::string::npos);
        CHECK(text.find("wavefunction.hpp") == std::string::npos);
        CHECK(text.find("laguerre") == std::string::npos);
    }
}
