#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbcat {

/// Runs the command line front end. Exit codes: 0 all checks pass, 1 a
/// verification found a counterexample, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbcat
