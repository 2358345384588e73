#ifndef SDGRAPH_TOOLS_CLI_HPP_
#define SDGRAPH_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace sdgraph::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapacity = 3;

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);
// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sdgraph::cli

#endif  // SDGRAPH_TOOLS_CLI_HPP_
