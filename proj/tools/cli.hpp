#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace johnson::cli {

/// Exit codes: 0 success, 1 invariant or verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace johnson::cli
