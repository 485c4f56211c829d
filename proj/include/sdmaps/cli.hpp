#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sdmaps/sd_report.hpp"

namespace sdmaps {

enum ExitCode : int { kExitPass = 0, kExitUsage = 1, kExitMath = 2, kExitInternal = 3 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Copy of a payload with every "stats" member removed, at any depth.
Json strip_stats(const Json& payload);

}  // namespace sdmaps
