#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace udyn::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kDegenerate = 3 };

struct CliConfig {
  std::string command;
  long p = 0;
  std::string a, b, c;
  std::optional<std::string> x;
  std::optional<std::string> r;
  std::int64_t n = 10;
  std::int64_t horizon = 25;
  std::int64_t samples = 20;
  std::optional<std::uint64_t> seed;
  std::int64_t precision = 64;
  bool force_truncated = false;
  std::string output = "text";
  std::string grid_file;
  std::optional<std::string> b_star, c_star, b_hat, b_prime, c_prime;
};

/// Parses argv into a config. Returns an exit code when parsing ends the run
/// (help or a usage error), after writing to out/err.
std::optional<int> parse(int argc, const char* const* argv, CliConfig& config, std::ostream& out,
                         std::ostream& err);

/// Runs a parsed command; reports go to out, diagnostics to err.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace udyn::cli
