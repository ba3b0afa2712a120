#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace econv {

// Dispatches the command line. Exit codes: 0 success, 1 domain error or
// failed verification, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace econv
