#pragma once

// Command line front end. Reports go to `out` as JSON, a one-line summary
// goes to `err`.
//
// Exit codes: 0 success, 1 negative verdict, 2 input error,
// 3 could not certify or not applicable.

#include <ostream>
#include <string>
#include <vector>

namespace intclos::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kNotCertified = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace intclos::cli
