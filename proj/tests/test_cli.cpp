#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "screwspec/critical.hpp"
#include "screwspec/spectrum.hpp"
#include "screwspec/textio.hpp"

using namespace screwspec;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(SCREWSPEC_CLI) + " " + args;
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // skip the column header
            continue;
        }
        rows.push_back(split_csv(line));
    }
    return rows;
}

}  // namespace

TEST_CASE("spectrum rows round-trip the closed-form energies") {
    REQUIRE(run("spectrum --set omega=20 --output cli_spec.csv") == 0);
    const auto rows = csv_rows("cli_spec.csv");
    REQUIRE(rows.size() == 4);

    SystemParams p;
    p.omega = 20.0;
    for (const auto& row : rows) {
        REQUIRE(row.size() == 5);
        const int n = static_cast<int>(parse_long(row[0]));
        const int ell = static_cast<int>(parse_long(row[1]));
        CHECK(parse_double(row[2]) == effective_angular_index(p, {n, ell}));
        CHECK(parse_double(row[3]) == energy_free(p, {n, ell}).energy);  // bit-exact
        CHECK(row[4] == "free");
    }
    std::remove("cli_spec.csv");
    std::remove("cli_spec.csv.meta");
}

TEST_CASE("identical configs produce byte-identical files plus a sidecar") {
    REQUIRE(run("spectrum --set omega=3.5 --set c1=1 --output cli_det_a.csv") == 0);
    REQUIRE(run("spectrum --set omega=3.5 --set c1=1 --output cli_det_b.csv") == 0);
    CHECK(slurp("cli_det_a.csv") == slurp("cli_det_b.csv"));

    const std::string meta = slurp("cli_det_a.csv.meta");
    CHECK(meta.find("command = spectrum") != std::string::npos);
    CHECK(meta.find("omega = 3.5") != std::string::npos);
    for (const char* f : {"cli_det_a.csv", "cli_det_a.csv.meta", "cli_det_b.csv",
                          "cli_det_b.csv.meta"}) {
        std::remove(f);
    }
}

TEST_CASE("exit codes: usage/config errors are 2, physics errors are 1") {
    CHECK(run("spectrum --set n_max=-1 2> /dev/null") == 2);        // empty range
    CHECK(run("spectrum --set omega=-30 2> /dev/null") == 1);       // reality violated
    CHECK(run("sweep --set sweep=omega --set sweep_steps=1 2> /dev/null") == 2);
    CHECK(run("sweep --set sweep_steps=10 2> /dev/null") == 2);     // no axis
    CHECK(run("nonsense 2> /dev/null") == 2);
    CHECK(run("spectrum --set beta=oops 2> /dev/null") == 2);
    CHECK(run("spectrum --config missing.cfg 2> /dev/null") == 2);
    CHECK(run("--help > /dev/null") == 0);
}

TEST_CASE("omega sweep reproduces the excited-state zero crossings") {
    REQUIRE(run("sweep --set sweep=omega --set sweep_start=0 --set sweep_stop=300"
                " --set sweep_steps=601 --set c1=1 --set c2=1 --set c3=1"
                " --set n_min=1 --set n_max=3 --output cli_sweep.csv") == 0);
    const auto rows = csv_rows("cli_sweep.csv");
    REQUIRE(rows.size() == 601u * 3u);

    const double expected[] = {77.71, 157.39, 265.50};
    for (int n = 1; n <= 3; ++n) {
        double crossing = -1.0;
        double prev_w = 0.0, prev_e = 0.0;
        bool have_prev = false;
        for (const auto& row : rows) {
            if (parse_long(row[2]) != n) continue;
            REQUIRE(row[5] == "ok");
            const double w = parse_double(row[1]);
            const double e = parse_double(row[4]);
            if (have_prev && (e < 0.0) != (prev_e < 0.0)) {
                crossing = prev_w + (w - prev_w) * prev_e / (prev_e - e);
                break;
            }
            prev_w = w;
            prev_e = e;
            have_prev = true;
        }
        CHECK(std::abs(crossing - expected[n - 1]) < 0.05);
    }
    std::remove("cli_sweep.csv");
    std::remove("cli_sweep.csv.meta");
}

TEST_CASE("beta sweep crosses zero where the bisection says") {
    REQUIRE(run("sweep --set sweep=beta --set sweep_start=0 --set sweep_stop=1.6"
                " --set sweep_steps=801 --set omega=20 --set n_min=0 --set n_max=2"
                " --output cli_bsweep.csv") == 0);
    const auto rows = csv_rows("cli_bsweep.csv");
    REQUIRE(rows.size() == 801u * 3u);

    SystemParams p;
    p.omega = 20.0;
    const double reference = beta_confinement_threshold(p, {}, {0, 1}, 0.0, 1.6);
    double crossing = -1.0;
    double prev_b = 0.0, prev_e = 0.0;
    bool have_prev = false;
    for (const auto& row : rows) {
        if (parse_long(row[2]) != 0) continue;
        const double b = parse_double(row[1]);
        const double e = parse_double(row[4]);
        if (have_prev && (e < 0.0) != (prev_e < 0.0)) {
            crossing = prev_b + (b - prev_b) * prev_e / (prev_e - e);
            break;
        }
        prev_b = b;
        prev_e = e;
        have_prev = true;
    }
    CHECK(std::abs(crossing - reference) < 1e-3);
    std::remove("cli_bsweep.csv");
    std::remove("cli_bsweep.csv.meta");
}

TEST_CASE("sweep rows that violate reality carry a status, others are unaffected") {
    REQUIRE(run("sweep --set sweep=omega --set sweep_start=-2 --set sweep_stop=2"
                " --set sweep_steps=5 --set n_max=0 --output cli_bad.csv") == 0);
    const auto rows = csv_rows("cli_bad.csv");
    REQUIRE(rows.size() == 5);
    int ok = 0, bad = 0;
    for (const auto& row : rows) {
        if (row[5] == "ok") ++ok;
        else if (row[5] == "NegativeDiscriminant") ++bad;
    }
    CHECK(ok == 3);   // omega in {0, 1, 2}
    CHECK(bad == 2);  // omega in {-2, -1} below the reality bound
    std::remove("cli_bad.csv");
    std::remove("cli_bad.csv.meta");
}

TEST_CASE("critical table emits closed and bisection roots") {
    REQUIRE(run("critical --output cli_crit.csv") == 0);
    const auto rows = csv_rows("cli_crit.csv");
    REQUIRE(rows.size() == 4);
    const double expected[] = {9.71, 48.83, 116.39, 212.39};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(std::abs(parse_double(rows[i][2]) - expected[i]) < 0.01);
        CHECK(parse_double(rows[i][4]) < 1e-6);  // |closed - bisect|
        CHECK(rows[i][7] == "ok");
    }
    std::remove("cli_crit.csv");
    std::remove("cli_crit.csv.meta");
}

TEST_CASE("wavefunction curves integrate to one and expose their norms") {
    REQUIRE(run("wavefunction --set omega=20 --set c1=1 --set c2=1 --set c3=1"
                " --set n_min=0 --set n_max=2 --output cli_wf.csv") == 0);
    const std::string text = slurp("cli_wf.csv");
    CHECK(text.find("# state n=0 ell=1 measure=rho norm=") != std::string::npos);
    CHECK(text.find("# state n=2 ell=1") != std::string::npos);

    const auto rows = csv_rows("cli_wf.csv");
    REQUIRE(rows.size() == 3u * 2001u);

    for (int n = 0; n <= 2; ++n) {
        std::vector<double> rho, rho_density;
        for (const auto& row : rows) {
            if (parse_long(row[0]) != n) continue;
            rho.push_back(parse_double(row[2]));
            rho_density.push_back(parse_double(row[4]));
        }
        REQUIRE(rho.size() == 2001);
        double integral = 0.0;
        for (std::size_t i = 1; i < rho.size(); ++i) {
            integral += 0.5 * (rho_density[i] + rho_density[i - 1]) * (rho[i] - rho[i - 1]);
        }
        CHECK(std::abs(integral - 1.0) < 1e-4);
    }

    // Interior dips of the n=2 density reach zero exactly twice.
    std::vector<double> density;
    for (const auto& row : rows) {
        if (parse_long(row[0]) == 2) density.push_back(parse_double(row[3]));
    }
    double peak = 0.0;
    for (double d : density) peak = std::max(peak, d);
    int dips = 0;
    for (std::size_t i = 1; i + 1 < density.size(); ++i) {
        if (density[i] < density[i - 1] && density[i] < density[i + 1] &&
            density[i] < 1e-4 * peak) {
            ++dips;
        }
    }
    CHECK(dips == 2);
    std::remove("cli_wf.csv");
    std::remove("cli_wf.csv.meta");
}

TEST_CASE("truncated wavefunction domains are rejected") {
    CHECK(run("wavefunction --set omega=20 --set rho_max=0.8 2> /dev/null") == 1);
}

TEST_CASE("relative outputs honor SCREWSPEC_OUTDIR") {
    REQUIRE(std::system("mkdir -p cli_outdir") == 0);
    const int code = std::system(("SCREWSPEC_OUTDIR=cli_outdir " + std::string(SCREWSPEC_CLI) +
                                  " spectrum --output env_spec.csv")
                                     .c_str());
    REQUIRE(WEXITSTATUS(code) == 0);
    CHECK(std::ifstream("cli_outdir/env_spec.csv").good());
    REQUIRE(std::system("rm -rf cli_outdir") == 0);
}

TEST_CASE("json-lines output parses object per row") {
    REQUIRE(run("spectrum --set omega=20 --format json-lines --output cli_spec.jsonl") == 0);
    std::ifstream in("cli_spec.jsonl");
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        const auto obj = nlohmann::json::parse(line);
        CHECK(obj.contains("n"));
        CHECK(obj.contains("energy"));
        ++count;
    }
    CHECK(count == 4);
    std::remove("cli_spec.jsonl");
    std::remove("cli_spec.jsonl.meta");
}

TEST_CASE("validate emits parseable json-lines checks") {
    REQUIRE(run("validate --format json-lines --output cli_val.jsonl"
                " --set oracle_grid_points=1200") == 0);
    std::ifstream in("cli_val.jsonl");
    std::string line;
    int total = 0, info = 0;
    while (std::getline(in, line)) {
        const auto obj = nlohmann::json::parse(line);
        CHECK(obj.contains("id"));
        CHECK(obj.contains("pass"));
        if (obj["informational"].get<bool>()) ++info;
        else CHECK(obj["pass"].get<bool>());
        ++total;
    }
    CHECK(total >= 30);
    CHECK(info >= 2);
    std::remove("cli_val.jsonl");
    std::remove("cli_val.jsonl.meta");
}
