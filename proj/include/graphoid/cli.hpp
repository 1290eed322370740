#ifndef GRAPHOID_CLI_HPP
#define GRAPHOID_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace graphoid {

// Exit codes: 0 success / property holds, 1 property violated
// (counterexample on stdout as JSON), 2 input or usage error.
// Machine-readable JSON goes to `out`; human summaries and diagnostics to
// `err`. Output is deterministic for fixed argv, files, and seeds.
int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err);

}  // namespace graphoid

#endif  // GRAPHOID_CLI_HPP
