#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace birat::cli {

enum class Command { kClassify, kGb, kDivdiff };

struct RunConfig {
  Command command = Command::kClassify;
  std::string field = "Q";
  std::string order = "degrevlex";
  bool json = false;
  bool show_basis = false;
  std::vector<std::string> polys;
  std::optional<std::string> file;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDegenerate = 3;

struct Outcome {
  int exit_code = kExitOk;
  std::string out;  // stdout payload
  std::string err;  // stderr payload
};

/// One instance given as polynomial strings.
Outcome run_classify(const RunConfig& cfg, const std::vector<std::string>& polys);
Outcome run_gb(const RunConfig& cfg, const std::vector<std::string>& polys);
Outcome run_divdiff(const RunConfig& cfg, const std::vector<std::string>& polys);

/// Dispatches on cfg.command; handles --file batches (one instance per
/// line, ';'-separated, '#' comments). The exit code of a batch is the
/// maximum over its stanzas.
Outcome run(const RunConfig& cfg);

/// Full command-line entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace birat::cli
