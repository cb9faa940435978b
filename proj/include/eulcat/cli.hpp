#ifndef EULCAT_CLI_HPP
#define EULCAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace eulcat::cli {

inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kInputError = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names accepted by `demo`.
std::vector<std::string> demo_names();

}  // namespace eulcat::cli

#endif  // EULCAT_CLI_HPP
