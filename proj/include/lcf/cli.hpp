#ifndef LCF_CLI_HPP
#define LCF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lcf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.  Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcf::cli

#endif  // LCF_CLI_HPP
