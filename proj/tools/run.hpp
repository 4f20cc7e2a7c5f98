#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qslab::cli {

/// Entry point behind main(): parses argv-style arguments, runs the
/// requested subcommand and writes reports. Exit codes: 0 for
/// supported/PASS, 1 for refuted/violation, 2 for inconclusive, >2 for
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qslab::cli
