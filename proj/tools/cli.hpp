#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lastsq::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or range error,
/// 3 class/domain precondition violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// T(n,r) for n = 1..n_max as CSV: header "n\r,0,..,n_max-1", then one ragged
/// row per n holding r = 0..n-1.
std::string table_csv(long long n_max);
std::string table_plain(long long n_max);

} // namespace lastsq::cli
