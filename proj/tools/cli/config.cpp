#include "cli/config.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ipr::cli {

namespace {

struct KeySpec {
  const char* key;
  ValueType type;
  bool required;
  const char* fallback;  // nullptr: no default
  std::int64_t min = 0;  // integers only
};

struct CommandSpec {
  const char* name;
  std::vector<KeySpec> keys;
};

const std::vector<KeySpec>& dynamics_keys() {
  static const std::vector<KeySpec> keys = {
      {"system", ValueType::path, true, nullptr},
      {"event", ValueType::text, false, nullptr},
      {"phi", ValueType::text, true, nullptr},
      {"epsilon", ValueType::rational, true, nullptr},
      {"window", ValueType::text, false, "full"},
      {"domain_dim", ValueType::integer, false, "1", 1},
      {"r_max", ValueType::integer, false, "4", 1},
  };
  return keys;
}

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs = {
      {"hj",
       {{"k", ValueType::integer, true, nullptr, 1},
        {"t", ValueType::integer, true, nullptr, 1},
        {"m_max", ValueType::integer, false, "3", 1},
        {"exhaustive_limit", ValueType::integer, false, "1048576", 1}}},
      {"fu-ramsey",
       {{"s", ValueType::integer, true, nullptr, 1},
        {"k", ValueType::integer, true, nullptr, 1},
        {"r", ValueType::integer, false, nullptr, 1},
        {"r_start", ValueType::integer, false, "1", 1},
        {"r_max", ValueType::integer, false, "6", 1}}},
      {"fk-density", {{"r", ValueType::integer, true, nullptr, 1}, {"n", ValueType::integer, true, nullptr, 1}}},
      {"example-a", {{"r_max", ValueType::integer, false, "4", 1}}},
      {"recurrence", dynamics_keys()},
      {"classify", dynamics_keys()},
      {"search",
       {{"system", ValueType::path, true, nullptr},
        {"event", ValueType::text, false, nullptr},
        {"monomial", ValueType::text, true, nullptr},
        {"epsilon", ValueType::rational, true, nullptr},
        {"gens", ValueType::text, true, nullptr},
        {"domain_dim", ValueType::integer, false, "1", 1}}},
      {"density",
       {{"system", ValueType::path, true, nullptr},
        {"event", ValueType::text, false, nullptr},
        {"phi", ValueType::text, true, nullptr},
        {"epsilon", ValueType::rational, false, nullptr},
        {"n", ValueType::integer, true, nullptr, 1},
        {"domain_dim", ValueType::integer, false, "1", 1}}},
      {"probe",
       {{"system", ValueType::path, true, nullptr},
        {"event", ValueType::text, false, nullptr},
        {"phi", ValueType::text, true, nullptr},
        {"epsilon", ValueType::rational, true, nullptr},
        {"window", ValueType::text, false, "full"},
        {"gens", ValueType::text, true, nullptr},
        {"domain_dim", ValueType::integer, false, "1", 1}}},
  };
  return specs;
}

const std::vector<KeySpec> kBudgetKeys = {
    {"max_candidates", ValueType::integer, false, nullptr, 1},
    {"wall_clock", ValueType::rational, false, nullptr},
    {"workers", ValueType::integer, false, nullptr, 0},
    {"checkpoint_dir", ValueType::path, false, nullptr},
};

const std::vector<KeySpec> kOutputKeys = {
    {"path", ValueType::path, false, nullptr},
    {"format", ValueType::text, false, nullptr},
};

const CommandSpec* find_command(const std::string& name) {
  for (const auto& c : commands())
    if (name == c.name) return &c;
  return nullptr;
}

const KeySpec* find_key(const std::vector<KeySpec>& keys, const std::string& key) {
  for (const auto& k : keys)
    if (key == k.key) return &k;
  return nullptr;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const char* type_name(ValueType t) {
  switch (t) {
    case ValueType::integer: return "an integer";
    case ValueType::rational: return "a rational a/b";
    case ValueType::text: return "text";
    case ValueType::path: return "a path";
  }
  return "?";
}

/// Empty when the value has the key's type.
std::optional<std::string> type_error(const KeySpec& spec, const std::string& raw) {
  const std::string key = spec.key;
  if (raw.empty()) return "empty value for '" + key + "'";
  switch (spec.type) {
    case ValueType::integer: {
      std::int64_t v = 0;
      try {
        v = parse_int(raw);
      } catch (const std::exception&) {
        return "type mismatch: '" + key + "' must be " + type_name(spec.type) + ", got '" + raw + "'";
      }
      if (v < spec.min) return "'" + key + "' must be at least " + std::to_string(spec.min);
      return std::nullopt;
    }
    case ValueType::rational: {
      if (auto slash = raw.find('/'); slash != std::string::npos) {
        try {
          if (parse_int(trim(std::string_view(raw).substr(slash + 1))) == 0)
            return "zero denominator in '" + key + "'";
        } catch (const std::exception&) {
        }
      }
      try {
        (void)parse_rational(raw);
      } catch (const std::exception&) {
        return "type mismatch: '" + key + "' must be " + type_name(spec.type) + ", got '" + raw + "'";
      }
      return std::nullopt;
    }
    case ValueType::text:
    case ValueType::path: return std::nullopt;
  }
  return std::nullopt;
}

void check_section(const std::map<std::string, ConfigValue>& values, const std::vector<KeySpec>& keys,
                   const std::string& section, std::vector<ConfigError>& errors) {
  for (const auto& [key, value] : values) {
    const KeySpec* spec = find_key(keys, key);
    if (!spec) {
      errors.push_back({value.line, "unknown key '" + key + "' in [" + section + "]"});
      continue;
    }
    if (auto e = type_error(*spec, value.raw)) errors.push_back({value.line, *e});
  }
}

void fill_defaults(ExperimentConfig& c) {
  const CommandSpec* spec = find_command(c.command);
  if (!spec) return;
  for (const auto& k : spec->keys)
    if (k.fallback && !c.params.count(k.key)) c.params[k.key] = ConfigValue{k.fallback, 0};
}

const ConfigValue& lookup(const std::map<std::string, ConfigValue>& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw std::out_of_range("config key '" + key + "' is not set");
  return it->second;
}

void sort_errors(std::vector<ConfigError>& errors) {
  std::stable_sort(errors.begin(), errors.end(),
                   [](const ConfigError& a, const ConfigError& b) { return a.line < b.line; });
}

}  // namespace

std::string ConfigError::to_string() const {
  return line ? "line " + std::to_string(line) + ": " + message : message;
}

std::int64_t ExperimentConfig::integer(const std::string& key) const { return parse_int(lookup(params, key).raw); }

std::int64_t ExperimentConfig::integer_or(const std::string& key, std::int64_t fallback) const {
  return has(key) ? integer(key) : fallback;
}

Rational ExperimentConfig::rational(const std::string& key) const { return parse_rational(lookup(params, key).raw); }

std::string ExperimentConfig::text(const std::string& key) const { return lookup(params, key).raw; }

std::string ExperimentConfig::text_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}

std::optional<std::uint64_t> ExperimentConfig::max_candidates() const {
  if (!budget.count("max_candidates")) return std::nullopt;
  return static_cast<std::uint64_t>(parse_int(budget.at("max_candidates").raw));
}

std::optional<Rational> ExperimentConfig::wall_clock_seconds() const {
  if (!budget.count("wall_clock")) return std::nullopt;
  return parse_rational(budget.at("wall_clock").raw);
}

unsigned ExperimentConfig::workers() const {
  if (!budget.count("workers")) return 0;
  return static_cast<unsigned>(parse_int(budget.at("workers").raw));
}

std::string ExperimentConfig::checkpoint_dir() const {
  return budget.count("checkpoint_dir") ? budget.at("checkpoint_dir").raw : std::string("checkpoints");
}

std::string ExperimentConfig::output_path() const { return output.count("path") ? output.at("path").raw : ""; }

std::string ExperimentConfig::format() const {
  if (output.count("format")) return output.at("format").raw;
  return command == "recurrence" ? "csv" : "report";
}

std::string ExperimentConfig::serialize() const {
  std::ostringstream out;
  out << "command = " << command << "\n";
  for (const auto& [k, v] : params) out << k << " = " << v.raw << "\n";
  if (!budget.empty()) {
    out << "\n[budget]\n";
    for (const auto& [k, v] : budget) out << k << " = " << v.raw << "\n";
  }
  if (!output.empty()) {
    out << "\n[output]\n";
    for (const auto& [k, v] : output) out << k << " = " << v.raw << "\n";
  }
  return out.str();
}

std::string ExperimentConfig::hash() const {
  std::string identity = "command=" + command + "\n";
  for (const auto& [k, v] : params) identity += k + "=" + v.raw + "\n";
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a 64
  for (unsigned char c : identity) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<ConfigError> validate(const ExperimentConfig& c) {
  std::vector<ConfigError> errors;
  if (c.command.empty()) {
    errors.push_back({0, "missing required key 'command'"});
    return errors;
  }
  const CommandSpec* spec = find_command(c.command);
  if (!spec) {
    errors.push_back({c.command_line, "unknown command '" + c.command + "'"});
  } else {
    check_section(c.params, spec->keys, "params", errors);
    for (const auto& k : spec->keys)
      if (k.required && !c.params.count(k.key))
        errors.push_back({0, "missing required key '" + std::string(k.key) + "' for command " + c.command});
  }
  check_section(c.budget, kBudgetKeys, "budget", errors);
  check_section(c.output, kOutputKeys, "output", errors);
  if (auto it = c.budget.find("wall_clock"); it != c.budget.end() && !type_error(kBudgetKeys[1], it->second.raw)) {
    if (parse_rational(it->second.raw) <= 0) errors.push_back({it->second.line, "budget wall_clock must be positive"});
  }
  if (auto it = c.output.find("format"); it != c.output.end() && it->second.raw != "csv" && it->second.raw != "report")
    errors.push_back({it->second.line, "output format must be csv or report, got '" + it->second.raw + "'"});
  if (auto it = c.output.find("format"); it != c.output.end() && it->second.raw == "csv" && c.command != "recurrence" &&
                                         c.command != "classify")
    errors.push_back({it->second.line, "csv output is only available for recurrence and classify"});
  sort_errors(errors);
  return errors;
}

ParseResult read_config(std::string_view text) {
  ExperimentConfig c;
  std::vector<ConfigError> errors;
  std::string section = "params";
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw_line;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back({line_no, "malformed section header '" + line + "'"});
        continue;
      }
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section != "params" && section != "budget" && section != "output")
        errors.push_back({line_no, "unknown section [" + section + "]"});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back({line_no, "expected 'key = value', got '" + line + "'"});
      continue;
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) {
      errors.push_back({line_no, "missing key before '='"});
      continue;
    }
    if (section == "params" && key == "command") {
      if (!c.command.empty()) errors.push_back({line_no, "duplicate key 'command'"});
      c.command = value;
      c.command_line = line_no;
      continue;
    }
    std::map<std::string, ConfigValue>* target = nullptr;
    if (section == "params") target = &c.params;
    else if (section == "budget") target = &c.budget;
    else if (section == "output") target = &c.output;
    else continue;  // already reported
    if (target->count(key)) {
      errors.push_back({line_no, "duplicate key '" + key + "'"});
      continue;
    }
    (*target)[key] = ConfigValue{value, line_no};
  }
  ParseResult result;
  result.config = std::move(c);
  result.errors = std::move(errors);
  return result;
}

ParseResult parse_config(std::string_view text) {
  auto result = read_config(text);
  auto more = validate(*result.config);
  result.errors.insert(result.errors.end(), more.begin(), more.end());
  sort_errors(result.errors);
  if (result.errors.empty()) fill_defaults(*result.config);
  else result.config.reset();
  return result;
}

ParseResult apply_overrides(ExperimentConfig c, const std::vector<std::string>& overrides) {
  std::vector<ConfigError> errors;
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) {
      errors.push_back({0, "override '" + o + "' is not key=value"});
      continue;
    }
    std::string key = trim(std::string_view(o).substr(0, eq));
    const std::string value = trim(std::string_view(o).substr(eq + 1));
    auto* target = &c.params;
    if (key.starts_with("budget.")) {
      target = &c.budget;
      key = key.substr(7);
    } else if (key.starts_with("output.")) {
      target = &c.output;
      key = key.substr(7);
    } else if (key.starts_with("params.")) {
      key = key.substr(7);
    }
    if (target == &c.params && key == "command") {
      c.command = value;
      c.command_line = 0;
      continue;
    }
    (*target)[key] = ConfigValue{value, 0};
  }
  auto more = validate(c);
  errors.insert(errors.end(), more.begin(), more.end());
  ParseResult result;
  if (errors.empty()) {
    fill_defaults(c);
    result.config = std::move(c);
  }
  result.errors = std::move(errors);
  return result;
}

std::vector<std::string> known_commands() {
  std::vector<std::string> out;
  for (const auto& c : commands()) out.emplace_back(c.name);
  return out;
}

}  // namespace ipr::cli
