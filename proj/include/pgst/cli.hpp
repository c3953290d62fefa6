// In-process command-line frontend: classify / decide / certify / witness /
// spectrum / scan, each emitting deterministic JSON (and CSV for scans).
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pgst::cli {

// Runs one job and streams its artifacts.  Returns the process exit code:
// 0 on success (verdict content never affects it), 2 on malformed input,
// 3 when a size cap is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgst::cli
