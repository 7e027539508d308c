#pragma once

#include "cli/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ipr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBudget = 2;

struct RunOptions {
  /// Relative paths inside the config (system files) resolve against this.
  std::string base_dir;
  /// Written as the `# generated` header line of every artifact.
  std::string timestamp;
  /// Checkpoint to resume from; refused unless its hash matches the config.
  std::optional<std::string> resume_path;
  /// Budget used when the config sets no max_candidates (IPRTOOL_BUDGET).
  std::optional<std::uint64_t> default_budget;
};

/// Runs one experiment. Exit codes: 0 completed (including verdicts such as
/// "fails" with a witness), 1 config or system error, 2 budget exceeded with a
/// checkpoint at <checkpoint_dir>/<hash>.ckpt.
///
/// Primary artifacts go to the configured output path or, without one, to
/// `out` after the summary. Certificates accompanying a report go to
/// `<path>.cert`. Errors are written to `err` as one JSON record.
int run(const ExperimentConfig& config, const RunOptions& options, std::ostream& out, std::ostream& err);

/// Verifies every certificate block in `text`; one `ok`/`FAIL` line each.
/// Returns 0 when all verify and at least one was found.
int check_text(std::string_view text, std::ostream& out);

struct ErrorItem {
  std::size_t line = 0;
  std::string message;
};

/// {"error": {"kind": .., "messages": [{"line": .., "message": ..}]}}
void write_error_record(std::ostream& err, std::string_view kind, const std::vector<ErrorItem>& items);

struct Checkpoint {
  std::string hash;
  std::string command;
  unsigned stage = 0;
  std::vector<std::uint8_t> resume;
};

std::string checkpoint_to_text(const Checkpoint& c);
Checkpoint checkpoint_from_text(std::string_view text);

}  // namespace ipr::cli
