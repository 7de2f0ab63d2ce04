#ifndef LIEC_CLI_HPP
#define LIEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace liec::cli {

// Exit codes: 0 success, 1 non-colorable solve input, 2 invalid input or
// usage, 3 internal assertion failure.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace liec::cli

#endif
