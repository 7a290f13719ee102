#ifndef LPI_CLI_HPP
#define LPI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lpi {

enum ExitCode : int {
    exit_ok = 0,
    exit_false = 1,
    exit_usage = 2,
    exit_exhausted = 3,
};

inline constexpr int cli_default_q_max = 25;

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lpi

#endif
