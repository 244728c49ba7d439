#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chibind {

// Exit codes: 0 success, 1 negative answer (not in class, bad coloring,
// campaign violations), 2 usage or input error, 3 solver timeout.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chibind
