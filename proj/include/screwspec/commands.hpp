#pragma once

#include <iosfwd>

#include "screwspec/runconfig.hpp"

namespace screwspec {

// Subcommand drivers behind the CLI. Each resolves the output target from the
// config (stdout, or a file honoring SCREWSPEC_OUTDIR for relative paths,
// plus a `.meta` sidecar), writes deterministic rows, and returns the process
// exit code. Domain and config errors propagate as exceptions; main() maps
// them to exit codes 1 and 2.

int cmd_spectrum(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_critical(const RunConfig& cfg);
int cmd_wavefunction(const RunConfig& cfg);
int cmd_validate(const RunConfig& cfg);

}  // namespace screwspec
