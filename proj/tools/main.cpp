#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "screwspec/commands.hpp"

namespace {

struct CommonFlags {
    std::string config;
    std::vector<std::string> sets;
    std::string output;
    std::string format;
    std::string measure;
    double tolerance = -1.0;
};

void attach_common(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--config", flags.config, "config file of key = value lines");
    sub->add_option("--set", flags.sets, "override a config key, key=value (repeatable)");
    sub->add_option("--output", flags.output, "output path (default: stdout)");
    sub->add_option("--format", flags.format, "csv | json-lines")
        ->check(CLI::IsMember({"csv", "json-lines"}));
    sub->add_option("--measure", flags.measure, "rho | flat normalization measure")
        ->check(CLI::IsMember({"rho", "flat"}));
    sub->add_option("--tolerance", flags.tolerance,
                    "bisection tolerance (critical) or oracle tolerance (validate)");
}

screwspec::RunConfig resolve(const CommonFlags& flags) {
    screwspec::RunConfig cfg;
    if (!flags.config.empty()) cfg = screwspec::parse_config_file(flags.config);
    for (const std::string& kv : flags.sets) screwspec::apply_override(cfg, kv);
    if (!flags.output.empty()) cfg.output = flags.output;
    if (!flags.format.empty()) {
        cfg.format = flags.format == "csv" ? screwspec::OutputFormat::csv
                                           : screwspec::OutputFormat::json_lines;
    }
    if (!flags.measure.empty()) {
        cfg.measure = flags.measure == "rho" ? screwspec::Measure::rho_weighted
                                             : screwspec::Measure::flat;
    }
    if (flags.tolerance >= 0.0) cfg.tolerance = flags.tolerance;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form and finite-difference bound states of a magnetic quadrupole "
                 "moment in a rotating frame with a screw dislocation"};
    app.require_subcommand(1);

    CommonFlags spectrum_flags, sweep_flags, critical_flags, wavefunction_flags, validate_flags;
    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form energy levels");
    CLI::App* sweep = app.add_subcommand("sweep", "energy curves along omega|beta|n|ell");
    CLI::App* critical = app.add_subcommand("critical", "zero-energy rotation thresholds");
    CLI::App* wavefunction =
        app.add_subcommand("wavefunction", "radial probability density curves");
    CLI::App* validate = app.add_subcommand("validate", "run the full self-check battery");
    attach_common(spectrum, spectrum_flags);
    attach_common(sweep, sweep_flags);
    attach_common(critical, critical_flags);
    attach_common(wavefunction, wavefunction_flags);
    attach_common(validate, validate_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) return screwspec::cmd_spectrum(resolve(spectrum_flags));
        if (sweep->parsed()) return screwspec::cmd_sweep(resolve(sweep_flags));
        if (critical->parsed()) return screwspec::cmd_critical(resolve(critical_flags));
        if (wavefunction->parsed())
            return screwspec::cmd_wavefunction(resolve(wavefunction_flags));
        if (validate->parsed()) return screwspec::cmd_validate(resolve(validate_flags));
    } catch (const screwspec::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const screwspec::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
