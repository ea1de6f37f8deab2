#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpcalc {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 on success, 1 on domain errors, 2 on syntax or usage errors.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace gpcalc
