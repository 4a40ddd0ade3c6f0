#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigcat {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit status: 0 on success (including --help), 1 on typing
/// errors and audit counterexamples, 2 on usage, parse and environment
/// errors. Identical invocations are byte-identical on `out`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigcat
