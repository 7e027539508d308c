#include "cli/commands.hpp"
#include "cli/config.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string utc_now() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int config_errors(const std::vector<ipr::cli::ConfigError>& errors) {
  std::vector<ipr::cli::ErrorItem> items;
  for (const auto& e : errors) {
    std::cerr << "iprtool: " << e.to_string() << "\n";
    items.push_back({e.line, e.message});
  }
  ipr::cli::write_error_record(std::cerr, "config", items);
  return ipr::cli::kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact IP-set, Hales-Jewett and recurrence-set experiments"};
  app.set_version_flag("--version", "iprtool 1.0");

  std::string command;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output;
  std::string format;
  std::string check_path;
  std::string resume_path;
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> budget;
  bool print_config = false;

  app.add_option("command", command, "Experiment: hj, fu-ramsey, fk-density, example-a, recurrence, classify, "
                                      "search, density, probe (overrides the config's command)");
  app.add_option("-c,--config", config_path, "Experiment config file")->check(CLI::ExistingFile);
  app.add_option("-s,--set", overrides, "Override key=value (budget.key / output.key for other sections)");
  app.add_option("-o,--output", output, "Output path");
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"csv", "report"}));
  app.add_option("-w,--workers", workers, "Worker threads (0 = all cores)");
  app.add_option("-b,--budget", budget, "Maximum search candidates")->check(CLI::PositiveNumber);
  app.add_option("--resume", resume_path, "Resume from a checkpoint of the same config")->check(CLI::ExistingFile);
  app.add_option("--check", check_path, "Re-verify the certificates in a file and exit")->check(CLI::ExistingFile);
  app.add_flag("--print-config", print_config, "Print the resolved config and its hash, then exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0) ipr::cli::write_error_record(std::cerr, "usage", {{0, e.what()}});
    return code == 0 ? 0 : ipr::cli::kExitError;
  }

  if (!check_path.empty()) {
    auto text = slurp(check_path);
    if (!text) {
      ipr::cli::write_error_record(std::cerr, "io", {{0, "cannot read " + check_path}});
      return ipr::cli::kExitError;
    }
    return ipr::cli::check_text(*text, std::cout);
  }

  ipr::cli::ExperimentConfig config;
  ipr::cli::RunOptions run;
  if (!config_path.empty()) {
    auto text = slurp(config_path);
    if (!text) {
      ipr::cli::write_error_record(std::cerr, "io", {{0, "cannot read " + config_path}});
      return ipr::cli::kExitError;
    }
    // Flags may complete a partial file, so validation waits for the overrides.
    auto parsed = ipr::cli::read_config(*text);
    if (!parsed.errors.empty()) return config_errors(parsed.errors);
    config = std::move(*parsed.config);
    run.base_dir = std::filesystem::path(config_path).parent_path().string();
  }

  if (!command.empty()) overrides.insert(overrides.begin(), "command=" + command);
  // Flag paths are relative to the working directory, file paths to the file.
  if (!output.empty()) overrides.push_back("output.path=" + std::filesystem::absolute(output).string());
  if (!format.empty()) overrides.push_back("output.format=" + format);
  if (workers) overrides.push_back("budget.workers=" + std::to_string(*workers));
  if (budget) overrides.push_back("budget.max_candidates=" + std::to_string(*budget));
  auto applied = ipr::cli::apply_overrides(std::move(config), overrides);
  if (!applied.config) return config_errors(applied.errors);

  if (print_config) {
    std::cout << applied.config->serialize() << "# hash " << applied.config->hash() << "\n";
    return 0;
  }

  if (const char* env = std::getenv("IPRTOOL_BUDGET"); env && *env) {
    try {
      const auto v = ipr::parse_int(env);
      if (v <= 0) throw std::invalid_argument("must be positive");
      run.default_budget = static_cast<std::uint64_t>(v);
    } catch (const std::exception& e) {
      ipr::cli::write_error_record(std::cerr, "config", {{0, std::string("IPRTOOL_BUDGET: ") + e.what()}});
      return ipr::cli::kExitError;
    }
  }
  run.timestamp = utc_now();
  if (!resume_path.empty()) run.resume_path = resume_path;
  return ipr::cli::run(*applied.config, run, std::cout, std::cerr);
}
