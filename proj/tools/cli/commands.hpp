#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace xgratio::cli {

// Process exit codes; part of the command-line contract.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // characterization check failed, or a numerical routine gave up
  kUsage = 2,
  kIo = 3,
  kData = 4,
};

struct Environment {
  // Value of XGRATIO_SEED, if set. Used when --seed is absent.
  std::optional<std::string> seed;
};

inline constexpr unsigned long long kDefaultSeed = 1;

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

// Shortest decimal that parses back to the same double.
std::string format_number(double value);

}  // namespace xgratio::cli
