#ifndef NICHEGRAPH_CLI_HPP
#define NICHEGRAPH_CLI_HPP

#include <iosfwd>

namespace nichegraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 3;

/// Entry point for the nichegraph tool. Results go to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nichegraph

#endif  // NICHEGRAPH_CLI_HPP
