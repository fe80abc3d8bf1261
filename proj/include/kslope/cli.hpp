#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kslope::cli {

// Runs the command-line frontend in-process. `args` excludes argv[0].
// Returns the process exit code:
//   0 - computation completed (whatever the verdict),
//   2 - validation or usage error,
//   3 - a requested witness search found nothing.
// All structured output goes to `out`; human-readable errors go to `err`
// (as JSON when --json-errors is in effect).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kslope::cli
