#ifndef LEXIDIS_TOOLS_CLI_HPP
#define LEXIDIS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lexidis::cli
{

enum Exit : int
{
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// Runs one command. `args` excludes the program name. "-" as an input
/// reads `in`, as an output writes `out`.
int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace lexidis::cli

#endif // LEXIDIS_TOOLS_CLI_HPP
