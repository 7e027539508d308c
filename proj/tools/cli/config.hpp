#pragma once

#include "ipr/algebra/numbers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ipr::cli {

/// Experiment file grammar, one item per line:
///
///   # comment
///   key = value          parameters (implicit [params] section at the top)
///   [params] | [budget] | [output]
///
/// [budget] keys: max_candidates, wall_clock (seconds, rational), workers,
/// checkpoint_dir. [output] keys: path, format (csv | report).
enum class ValueType { integer, rational, text, path };

struct ConfigValue {
  std::string raw;
  std::size_t line = 0;  // 0 for values set on the command line
};

struct ConfigError {
  std::size_t line = 0;
  std::string message;
  std::string to_string() const;
};

struct ExperimentConfig {
  std::string command;
  std::size_t command_line = 0;
  std::map<std::string, ConfigValue> params;
  std::map<std::string, ConfigValue> budget;
  std::map<std::string, ConfigValue> output;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  std::int64_t integer(const std::string& key) const;
  std::int64_t integer_or(const std::string& key, std::int64_t fallback) const;
  Rational rational(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::string text_or(const std::string& key, const std::string& fallback) const;

  std::optional<std::uint64_t> max_candidates() const;
  std::optional<Rational> wall_clock_seconds() const;
  unsigned workers() const;
  std::string checkpoint_dir() const;
  std::string output_path() const;
  std::string format() const;

  /// Canonical text; parse_config(serialize()) reproduces the config.
  std::string serialize() const;
  /// FNV-1a over the command and [params] only, as 16 hex digits, so a
  /// budget change keeps the identity of a resumable run.
  std::string hash() const;
};

struct ParseResult {
  std::optional<ExperimentConfig> config;
  std::vector<ConfigError> errors;
};

/// Parses and validates against the command's key schema; reports every
/// error found, each with its line.
ParseResult parse_config(std::string_view text);

/// Syntax only: the config is always returned, errors cover malformed lines,
/// unknown sections and duplicates. Used when flags may still complete it.
ParseResult read_config(std::string_view text);

/// Applies `key=value` or `section.key=value` overrides, then re-validates.
ParseResult apply_overrides(ExperimentConfig config, const std::vector<std::string>& overrides);

std::vector<ConfigError> validate(const ExperimentConfig& config);

std::vector<std::string> known_commands();

}  // namespace ipr::cli
