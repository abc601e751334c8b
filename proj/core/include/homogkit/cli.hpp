#ifndef HOMOGKIT_CLI_HPP
#define HOMOGKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace homogkit {

// Dispatches one command-line invocation. args excludes the program name.
// Normal output goes to out, problems to err. Returns the process exit code:
// 0 for success or a true verdict, 1 for a false verdict, 2 for errors (bad
// usage, unreadable input, domain violations). "--json" anywhere switches to
// machine-readable output; the HOMOGKIT_SEED environment variable overrides
// the default verification seed.
int runCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace homogkit

#endif
