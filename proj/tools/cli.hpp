#pragma once

// The cherednik command line: verification suites, normal forms and the star
// product. Exit codes: 0 pass, 1 a check failed, 2 bad configuration or input.

#include <iosfwd>
#include <string>
#include <vector>

namespace cherednik::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherednik::cli
