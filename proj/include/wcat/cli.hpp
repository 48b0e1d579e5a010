#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcat {

// Runs one CLI invocation. args excludes the program name. Exit codes:
// 0 success, 1 negative mathematical answer, 2 validation error,
// 3 bounds exceeded, 4 I/O or syntax error.
int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcat
