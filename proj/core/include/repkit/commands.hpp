#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repkit {

// Dispatches one CLI invocation (argv without the program name) and writes
// the report to `out`. Returns the process exit code: 0 success/FINITE,
// 2 UNDETERMINED, 1 error/FAIL.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace repkit
