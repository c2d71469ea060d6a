#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace thetadirac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command (argv without the program name). Never calls exit().
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs every non-blank, non-comment line of a file as a command.
int run_batch(const std::string& path, std::ostream& out, std::ostream& err);

/// Splits a command line on blanks, honouring single and double quotes.
std::vector<std::string> split_command_line(std::string_view line);

}  // namespace thetadirac::cli
