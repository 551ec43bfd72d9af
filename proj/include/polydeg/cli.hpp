#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polydeg/groebner.hpp"

namespace polydeg::cli {

inline constexpr const char* kToolName = "polydeg";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes.
enum Exit : int { kAllTrue = 0, kSomeFalse = 1, kIndeterminate = 2, kUsage = 3 };

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

/// "n" or "a..b" (inclusive, a <= b).
Range parse_range(const std::string& text);
std::string to_string(const Range& r);

struct RunConfig {
  std::string command;
  std::optional<Range> d;
  std::optional<Range> e;
  std::string method = "both";      ///< direct | incremental | both
  std::string strategy = "normal";  ///< normal | fifo
  std::string t = "1";
  std::vector<std::string> c;
  std::vector<std::string> psi0;
  Limits limits;
  std::string json_path;
  std::string cert_dir;
  std::string out_path;
  std::vector<std::string> cert_files;
  unsigned jobs = 1;
};

/// Defaults from POLYDEG_LIMITS (if set), then flags. Throws UsageError.
RunConfig parse_args(int argc, const char* const* argv);

struct RunResult {
  int exit_code = kAllTrue;
  std::string json;  ///< pretty-printed report
};

/// Executes the command; `log` receives one line per task.
RunResult run(const RunConfig& config, std::ostream& log);

/// Full command-line behavior: parse, run, write the report (to --json PATH
/// or `out`), diagnostics to `err`. Returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Drops every "elapsed_s" member, recursively.
std::string mask_timings(const std::string& json);

}  // namespace polydeg::cli
