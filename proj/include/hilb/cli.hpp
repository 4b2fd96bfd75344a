#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

/// args excludes the program name. The JSON report goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilb::cli
