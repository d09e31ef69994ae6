#pragma once

#include <string>
#include <vector>

namespace screwspec {

/// Shortest decimal rendering that round-trips a double exactly (17 significant
/// digits, "%.17g").
std::string format_g17(double v);

/// Strict double parse; throws std::invalid_argument unless the whole token converts.
double parse_double(const std::string& token);

/// Strict integer parse with the same contract.
long parse_long(const std::string& token);

/// Splits a CSV line on commas (the emitted files never quote fields).
std::vector<std::string> split_csv(const std::string& line);

}  // namespace screwspec
