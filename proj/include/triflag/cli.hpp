// cli.hpp - in-process entry point for the bfun command-line tool, kept
// separate from main() so tests can drive it directly.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triflag {
namespace cli {

// argv without the program name. Exit status: 0 success, 1 domain or usage
// error, 2 verification failure / scan disagreement.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace triflag
