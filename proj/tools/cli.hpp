#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotclock::cli {

// Dispatches the knotclock command line.  Exit codes: 0 success / all
// verifications passed, 1 verification failures or detected invariant
// violations, 2 input or usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace knotclock::cli
