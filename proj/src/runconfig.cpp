#include "screwspec/runconfig.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "screwspec/textio.hpp"

namespace screwspec {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& token) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + token + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) {
        throw std::invalid_argument("trailing characters in number: '" + token + "'");
    }
    return v;
}

long parse_long(const std::string& token) {
    std::size_t used = 0;
    long v;
    try {
        v = std::stol(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + token + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) {
        throw std::invalid_argument("trailing characters in integer: '" + token + "'");
    }
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int to_int(const std::string& value, const std::string& key, int line) {
    try {
        return static_cast<int>(parse_long(value));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key + ": " + e.what(), line);
    }
}

double to_double(const std::string& value, const std::string& key, int line) {
    try {
        return parse_double(value);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(key + ": " + e.what(), line);
    }
}

}  // namespace

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value, int line) {
    if (key == "mass") cfg.params.mass = to_double(value, key, line);
    else if (key == "quadrupole") cfg.params.quadrupole = to_double(value, key, line);
    else if (key == "lambda") cfg.params.lambda = to_double(value, key, line);
    else if (key == "omega") cfg.params.omega = to_double(value, key, line);
    else if (key == "k") cfg.params.wave_number = to_double(value, key, line);
    else if (key == "beta") cfg.params.beta = to_double(value, key, line);
    else if (key == "c1") cfg.potential.c1 = to_double(value, key, line);
    else if (key == "c2") cfg.potential.c2 = to_double(value, key, line);
    else if (key == "c3") cfg.potential.c3 = to_double(value, key, line);
    else if (key == "n_min") cfg.n_min = to_int(value, key, line);
    else if (key == "n_max") cfg.n_max = to_int(value, key, line);
    else if (key == "ell_min") cfg.ell_min = to_int(value, key, line);
    else if (key == "ell_max") cfg.ell_max = to_int(value, key, line);
    else if (key == "sweep") {
        if (value == "omega") cfg.sweep = SweepAxis::omega;
        else if (value == "beta") cfg.sweep = SweepAxis::beta;
        else if (value == "n") cfg.sweep = SweepAxis::n;
        else if (value == "ell") cfg.sweep = SweepAxis::ell;
        else throw ConfigError("sweep axis must be omega|beta|n|ell, got '" + value + "'", line);
    } else if (key == "sweep_start") cfg.sweep_start = to_double(value, key, line);
    else if (key == "sweep_stop") cfg.sweep_stop = to_double(value, key, line);
    else if (key == "sweep_steps") cfg.sweep_steps = to_int(value, key, line);
    else if (key == "output") cfg.output = value;
    else if (key == "format") {
        if (value == "csv") cfg.format = OutputFormat::csv;
        else if (value == "json-lines") cfg.format = OutputFormat::json_lines;
        else throw ConfigError("format must be csv|json-lines, got '" + value + "'", line);
    } else if (key == "measure") {
        if (value == "rho") cfg.measure = Measure::rho_weighted;
        else if (value == "flat") cfg.measure = Measure::flat;
        else throw ConfigError("measure must be rho|flat, got '" + value + "'", line);
    } else if (key == "tolerance") cfg.tolerance = to_double(value, key, line);
    else if (key == "rho_max") cfg.rho_max = to_double(value, key, line);
    else if (key == "oracle_grid_points") cfg.oracle.grid_points = to_int(value, key, line);
    else if (key == "oracle_rho_max") cfg.oracle.rho_max = to_double(value, key, line);
    else if (key == "oracle_eigs") cfg.oracle.eigs_requested = to_int(value, key, line);
    else throw ConfigError("unknown key '" + key + "'", line);
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    RunConfig cfg;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value', got '" + line + "'", line_no);
        }
        apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
    }
    return cfg;
}

void apply_override(RunConfig& cfg, const std::string& key_value) {
    const std::size_t eq = key_value.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("--set expects key=value, got '" + key_value + "'");
    }
    apply_key(cfg, trim(key_value.substr(0, eq)), trim(key_value.substr(eq + 1)), 0);
}

void validate(const RunConfig& cfg) {
    cfg.params.validate();
    cfg.potential.validate();
    if (cfg.n_min < 0) throw ConfigError("n_min must be >= 0");
}

std::string dump(const RunConfig& cfg) {
    std::ostringstream os;
    os << "mass = " << format_g17(cfg.params.mass) << '\n'
       << "quadrupole = " << format_g17(cfg.params.quadrupole) << '\n'
       << "lambda = " << format_g17(cfg.params.lambda) << '\n'
       << "omega = " << format_g17(cfg.params.omega) << '\n'
       << "k = " << format_g17(cfg.params.wave_number) << '\n'
       << "beta = " << format_g17(cfg.params.beta) << '\n'
       << "c1 = " << format_g17(cfg.potential.c1) << '\n'
       << "c2 = " << format_g17(cfg.potential.c2) << '\n'
       << "c3 = " << format_g17(cfg.potential.c3) << '\n'
       << "n_min = " << cfg.n_min << '\n'
       << "n_max = " << cfg.n_max << '\n'
       << "ell_min = " << cfg.ell_min << '\n'
       << "ell_max = " << cfg.ell_max << '\n';
    if (cfg.sweep != SweepAxis::none) {
        const char* axis = cfg.sweep == SweepAxis::omega ? "omega"
                           : cfg.sweep == SweepAxis::beta ? "beta"
                           : cfg.sweep == SweepAxis::n    ? "n"
                                                          : "ell";
        os << "sweep = " << axis << '\n'
           << "sweep_start = " << format_g17(cfg.sweep_start) << '\n'
           << "sweep_stop = " << format_g17(cfg.sweep_stop) << '\n'
           << "sweep_steps = " << cfg.sweep_steps << '\n';
    }
    os << "format = " << (cfg.format == OutputFormat::csv ? "csv" : "json-lines") << '\n'
       << "measure = " << (cfg.measure == Measure::rho_weighted ? "rho" : "flat") << '\n';
    if (cfg.tolerance >= 0.0) os << "tolerance = " << format_g17(cfg.tolerance) << '\n';
    if (cfg.rho_max > 0.0) os << "rho_max = " << format_g17(cfg.rho_max) << '\n';
    os << "oracle_grid_points = " << cfg.oracle.grid_points << '\n'
       << "oracle_eigs = " << cfg.oracle.eigs_requested << '\n';
    if (cfg.oracle.rho_max > 0.0) {
        os << "oracle_rho_max = " << format_g17(cfg.oracle.rho_max) << '\n';
    }
    return os.str();
}

}  // namespace screwspec
