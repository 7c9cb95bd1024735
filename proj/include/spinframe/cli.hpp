#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinframe::cli {

/// Exit codes: 0 success and claims hold, 1 a checked claim was violated,
/// 2 invalid input.
inline constexpr int kOk = 0;
inline constexpr int kClaimViolated = 1;
inline constexpr int kInputError = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` unless `--out <path>` is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinframe::cli
