#include "screwspec/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <vector>

#include <json.hpp>

#include "screwspec/critical.hpp"
#include "screwspec/spectrum.hpp"
#include "screwspec/textio.hpp"
#include "screwspec/validation.hpp"
#include "screwspec/wavefunction.hpp"

namespace screwspec {

namespace {

using nlohmann::json;

// Output resolution: empty path -> stdout; relative path -> under
// SCREWSPEC_OUTDIR when that variable is set. File targets get a `.meta`
// sidecar with the resolved configuration so data files stay byte-identical
// across reruns.
struct Sink {
    std::ofstream file;
    std::string path;  // empty when writing to stdout

    std::ostream& stream() { return path.empty() ? std::cout : file; }
};

Sink open_sink(const RunConfig& cfg, const std::string& command) {
    Sink sink;
    if (cfg.output.empty()) return sink;
    std::string path = cfg.output;
    if (path.front() != '/') {
        if (const char* dir = std::getenv("SCREWSPEC_OUTDIR"); dir && *dir) {
            path = std::string(dir) + "/" + path;
        }
    }
    sink.file.open(path);
    if (!sink.file) throw ConfigError("cannot open output file '" + path + "'");
    sink.path = path;

    std::ofstream meta(path + ".meta");
    meta << "command = " << command << '\n' << dump(cfg);
    return sink;
}

std::string error_tag(const DomainError& e) {
    if (dynamic_cast<const NegativeDiscriminant*>(&e)) return "NegativeDiscriminant";
    if (dynamic_cast<const DegenerateDenominator*>(&e)) return "DegenerateDenominator";
    if (dynamic_cast<const SpuriousRoot*>(&e)) return "SpuriousRoot";
    if (dynamic_cast<const NegativeInnerRadical*>(&e)) return "NegativeInnerRadical";
    if (dynamic_cast<const NoSignChange*>(&e)) return "NoSignChange";
    if (dynamic_cast<const RealityViolatedInBracket*>(&e)) return "RealityViolatedInBracket";
    if (dynamic_cast<const ZeroWaveNumber*>(&e)) return "ZeroWaveNumber";
    if (dynamic_cast<const TruncationTooSmall*>(&e)) return "TruncationTooSmall";
    if (dynamic_cast<const QuadratureNonConvergent*>(&e)) return "QuadratureNonConvergent";
    return "DomainError";
}

void require_nonempty_ranges(const RunConfig& cfg) {
    if (cfg.n_max < cfg.n_min || cfg.ell_max < cfg.ell_min) {
        throw ConfigError("empty quantum-number range: n " + std::to_string(cfg.n_min) + ".." +
                          std::to_string(cfg.n_max) + ", ell " + std::to_string(cfg.ell_min) +
                          ".." + std::to_string(cfg.ell_max));
    }
}

const char* case_name(PotentialCase c) {
    return c == PotentialCase::free_case ? "free" : "pseudo-harmonic";
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg) {
    validate(cfg);
    require_nonempty_ranges(cfg);
    Sink sink = open_sink(cfg, "spectrum");
    std::ostream& out = sink.stream();

    const bool free_case = cfg.potential.is_zero();
    if (cfg.format == OutputFormat::csv) out << "n,ell,nu,energy,case\n";
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
            const QuantumNumbers q{n, ell};
            const EnergyLevel level = free_case
                                          ? energy_free(cfg.params, q)
                                          : energy_pseudoharmonic(cfg.params, cfg.potential, q);
            const double nu = effective_angular_index(cfg.params, q);
            if (cfg.format == OutputFormat::csv) {
                out << n << ',' << ell << ',' << format_g17(nu) << ','
                    << format_g17(level.energy) << ',' << case_name(level.which) << '\n';
            } else {
                json row{{"n", n},
                         {"ell", ell},
                         {"nu", nu},
                         {"energy", level.energy},
                         {"case", case_name(level.which)}};
                out << row.dump() << '\n';
            }
        }
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    validate(cfg);
    require_nonempty_ranges(cfg);
    if (cfg.sweep == SweepAxis::none) {
        throw ConfigError("sweep requires a sweep axis (sweep = omega|beta|n|ell)");
    }
    if (cfg.sweep_steps < 2) {
        throw ConfigError("sweep_steps must be >= 2, got " + std::to_string(cfg.sweep_steps));
    }
    Sink sink = open_sink(cfg, "sweep");
    std::ostream& out = sink.stream();

    const char* axis = cfg.sweep == SweepAxis::omega ? "omega"
                       : cfg.sweep == SweepAxis::beta ? "beta"
                       : cfg.sweep == SweepAxis::n    ? "n"
                                                      : "ell";
    if (cfg.format == OutputFormat::csv) out << "axis,axis_value,n,ell,energy,status\n";

    const bool free_case = cfg.potential.is_zero();
    for (int i = 0; i < cfg.sweep_steps; ++i) {
        const double value =
            cfg.sweep_start +
            (cfg.sweep_stop - cfg.sweep_start) * i / static_cast<double>(cfg.sweep_steps - 1);

        SystemParams p = cfg.params;
        int n_lo = cfg.n_min, n_hi = cfg.n_max, l_lo = cfg.ell_min, l_hi = cfg.ell_max;
        switch (cfg.sweep) {
            case SweepAxis::omega: p.omega = value; break;
            case SweepAxis::beta: p.beta = value; break;
            case SweepAxis::n: n_lo = n_hi = static_cast<int>(std::lround(value)); break;
            case SweepAxis::ell: l_lo = l_hi = static_cast<int>(std::lround(value)); break;
            case SweepAxis::none: break;
        }

        for (int n = n_lo; n <= n_hi; ++n) {
            for (int ell = l_lo; ell <= l_hi; ++ell) {
                double energy = std::numeric_limits<double>::quiet_NaN();
                std::string status = "ok";
                try {
                    const QuantumNumbers q{n, ell};
                    energy = free_case ? energy_free(p, q).energy
                                       : energy_pseudoharmonic(p, cfg.potential, q).energy;
                } catch (const DomainError& e) {
                    status = error_tag(e);
                } catch (const std::invalid_argument&) {
                    status = "InvalidParameter";
                }
                if (cfg.format == OutputFormat::csv) {
                    out << axis << ',' << format_g17(value) << ',' << n << ',' << ell << ','
                        << format_g17(energy) << ',' << status << '\n';
                } else {
                    json row{{"axis", axis}, {"axis_value", value}, {"n", n},
                             {"ell", ell},   {"energy", energy},    {"status", status}};
                    if (std::isnan(energy)) row["energy"] = nullptr;
                    out << row.dump() << '\n';
                }
            }
        }
    }
    return 0;
}

int cmd_critical(const RunConfig& cfg) {
    validate(cfg);
    require_nonempty_ranges(cfg);
    Sink sink = open_sink(cfg, "critical");
    std::ostream& out = sink.stream();
    const double tol = cfg.tolerance > 0.0 ? cfg.tolerance : 1e-10;

    if (cfg.format == OutputFormat::csv) {
        out << "n,ell,omega_c_closed,omega_c_bisect,abs_diff,residual_closed,residual_bisect,"
               "status\n";
    }
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
            const QuantumNumbers q{n, ell};
            double closed = std::numeric_limits<double>::quiet_NaN();
            double bisect = std::numeric_limits<double>::quiet_NaN();
            double res_closed = closed, res_bisect = closed;
            std::string status = "ok";
            try {
                const CriticalResult c = omega_c_closed(cfg.params, cfg.potential, q);
                closed = c.omega_c;
                res_closed = c.residual;
                const CriticalResult b = omega_c_auto_bisect(cfg.params, cfg.potential, q, tol);
                bisect = b.omega_c;
                res_bisect = b.residual;
            } catch (const DomainError& e) {
                status = error_tag(e);
            }
            const double diff = std::abs(closed - bisect);
            if (cfg.format == OutputFormat::csv) {
                out << n << ',' << ell << ',' << format_g17(closed) << ',' << format_g17(bisect)
                    << ',' << format_g17(diff) << ',' << format_g17(res_closed) << ','
                    << format_g17(res_bisect) << ',' << status << '\n';
            } else {
                json row{{"n", n},
                         {"ell", ell},
                         {"omega_c_closed", closed},
                         {"omega_c_bisect", bisect},
                         {"abs_diff", diff},
                         {"residual_closed", res_closed},
                         {"residual_bisect", res_bisect},
                         {"status", status}};
                if (status != "ok") {
                    row["omega_c_closed"] = nullptr;
                    row["omega_c_bisect"] = nullptr;
                    row["abs_diff"] = nullptr;
                    row["residual_closed"] = nullptr;
                    row["residual_bisect"] = nullptr;
                }
                out << row.dump() << '\n';
            }
        }
    }
    return 0;
}

int cmd_wavefunction(const RunConfig& cfg) {
    validate(cfg);
    require_nonempty_ranges(cfg);
    Sink sink = open_sink(cfg, "wavefunction");
    std::ostream& out = sink.stream();

    struct StateRows {
        RadialSolution sol;
        int n, ell;
        double rho_max;
    };
    std::vector<StateRows> states;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
            const RadialSolution sol =
                build_solution(cfg.params, cfg.potential, {n, ell}, cfg.measure);
            const double rho_max =
                cfg.rho_max > 0.0 ? cfg.rho_max : 6.0 / std::sqrt(sol.width);
            states.push_back({sol, n, ell, rho_max});
        }
    }

    constexpr int kPoints = 2001;
    // Clipped domains are rejected before anything is emitted: the trapezoid
    // mass on the grid must already account for the whole state.
    for (const StateRows& st : states) {
        double mass = 0.0;
        double prev = 0.0;
        const double h = st.rho_max / (kPoints - 1);
        for (int i = 0; i < kPoints; ++i) {
            const double rho = i * h;
            const double psi = radial_psi(st.sol, rho);
            const double f =
                psi * psi * (st.sol.measure == Measure::rho_weighted ? rho : 1.0);
            if (i > 0) mass += 0.5 * (prev + f) * h;
            prev = f;
        }
        if (std::abs(1.0 - mass) > 5e-5) {
            throw TruncationTooSmall("state n=" + std::to_string(st.n) +
                                     " ell=" + std::to_string(st.ell) +
                                     ": grid out to rho_max=" + format_g17(st.rho_max) +
                                     " captures only " + format_g17(mass) +
                                     " of the norm");
        }
    }

    if (cfg.format == OutputFormat::csv) {
        for (const StateRows& st : states) {
            out << "# state n=" << st.n << " ell=" << st.ell << " measure="
                << (st.sol.measure == Measure::rho_weighted ? "rho" : "flat")
                << " norm=" << format_g17(st.sol.norm) << " width=" << format_g17(st.sol.width)
                << " nu_abs=" << format_g17(st.sol.nu_abs) << '\n';
        }
        out << "n,ell,rho,density,rho_density\n";
    } else {
        for (const StateRows& st : states) {
            json meta{{"type", "state"},
                      {"n", st.n},
                      {"ell", st.ell},
                      {"measure", st.sol.measure == Measure::rho_weighted ? "rho" : "flat"},
                      {"norm", st.sol.norm},
                      {"width", st.sol.width},
                      {"nu_abs", st.sol.nu_abs}};
            out << meta.dump() << '\n';
        }
    }

    for (const StateRows& st : states) {
        const double h = st.rho_max / (kPoints - 1);
        for (int i = 0; i < kPoints; ++i) {
            const double rho = i * h;
            const double psi = radial_psi(st.sol, rho);
            const double density = psi * psi;
            if (cfg.format == OutputFormat::csv) {
                out << st.n << ',' << st.ell << ',' << format_g17(rho) << ','
                    << format_g17(density) << ',' << format_g17(rho * density) << '\n';
            } else {
                json row{{"type", "row"},        {"n", st.n},
                         {"ell", st.ell},        {"rho", rho},
                         {"density", density},   {"rho_density", rho * density}};
                out << row.dump() << '\n';
            }
        }
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    validate(cfg);
    Sink sink = open_sink(cfg, "validate");
    std::ostream& out = sink.stream();

    ValidationOptions opts;
    if (cfg.tolerance > 0.0) opts.oracle_tol = cfg.tolerance;
    opts.oracle_grid_points = cfg.oracle.grid_points;

    const std::vector<Check> checks = run_validation(opts);
    for (const Check& c : checks) {
        if (cfg.format == OutputFormat::json_lines) {
            json row{{"id", c.id},
                     {"description", c.description},
                     {"computed", c.computed},
                     {"reference", c.reference},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass},
                     {"informational", c.informational},
                     {"detail", c.detail}};
            out << row.dump() << '\n';
        } else {
            const char* verdict = c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL");
            out << verdict << ' ' << c.id << ": computed=" << format_g17(c.computed);
            if (c.reference != 0.0) out << " reference=" << format_g17(c.reference);
            if (c.tolerance != 0.0) out << " tol=" << format_g17(c.tolerance);
            if (!c.detail.empty()) out << " | " << c.detail;
            out << '\n';
        }
    }
    return all_hard_pass(checks) ? 0 : 1;
}

}  // namespace screwspec
