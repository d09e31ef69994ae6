#pragma once

#include <string>

#include "screwspec/oracle.hpp"
#include "screwspec/params.hpp"
#include "screwspec/wavefunction.hpp"

namespace screwspec {

enum class OutputFormat { csv, json_lines };
enum class SweepAxis { none, omega, beta, n, ell };

/// Flat key = value run configuration shared by every CLI subcommand.
///
/// Recognized keys: mass, quadrupole, lambda, omega, k, beta, c1, c2, c3,
/// n_min, n_max, ell_min, ell_max, sweep, sweep_start, sweep_stop,
/// sweep_steps, output, format, measure, tolerance, rho_max,
/// oracle_grid_points, oracle_rho_max, oracle_eigs.
struct RunConfig {
    SystemParams params;
    PotentialParams potential;

    int n_min = 0;
    int n_max = 3;
    int ell_min = 1;
    int ell_max = 1;

    SweepAxis sweep = SweepAxis::none;
    double sweep_start = 0.0;
    double sweep_stop = 0.0;
    int sweep_steps = 0;

    std::string output;  ///< empty writes to stdout; relative paths honor SCREWSPEC_OUTDIR
    OutputFormat format = OutputFormat::csv;
    Measure measure = Measure::rho_weighted;
    double tolerance = -1.0;  ///< < 0 selects the per-command default
    double rho_max = 0.0;     ///< wavefunction grid extent; <= 0 selects 6/sqrt(width)

    OracleConfig oracle;
};

/// Parses a UTF-8 config file of `key = value` lines with `#` comments.
/// Throws ConfigError carrying the offending 1-based line number.
RunConfig parse_config_file(const std::string& path);

/// Applies one `key=value` override (the --set flag).
void apply_override(RunConfig& cfg, const std::string& key_value);

/// Applies a single key; line is used for error reporting (0 = not from a file).
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value, int line);

/// Re-validates the physical invariants; throws on violation.
void validate(const RunConfig& cfg);

/// Deterministic key = value dump of the resolved configuration (sidecar body).
std::string dump(const RunConfig& cfg);

}  // namespace screwspec
