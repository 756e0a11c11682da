#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szeged::cli {

/// Exit codes: 0 ok, 1 methods disagree (verify), 2 input or validation
/// error, 3 structural error (disconnected graph, tree method on a non-tree).
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kStructural = 3;

/// Runs one command line (args excludes the program name). Results go to
/// `out`; diagnostics and timings go to `err`. A graph path of "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace szeged::cli
