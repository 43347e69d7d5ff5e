#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psskit {

inline constexpr std::size_t kDefaultMaxSize = 18;

/// Runs one command line (without the program name). Reports go to `out`,
/// the human summary and diagnostics to `err`. Returns the exit status:
/// 0 success, 1 property-suite failure, 2 input or usage error.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace psskit
