#ifndef PACKBOUND_TOOLS_CLI_HH
#define PACKBOUND_TOOLS_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace packbound::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_usage = 1;
    inline constexpr int exit_violation = 2;

    /// Runs one invocation; args excludes the program name.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
