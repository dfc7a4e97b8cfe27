#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonconsec {

/// Runs the command-line front end on the given arguments (program name
/// excluded). Results go to `out`, diagnostics to `err`.
///
/// Exit codes: 0 success; 1 verification mismatch or internal inconsistency;
/// 2 usage or parse error; 3 domain-precondition error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonconsec
