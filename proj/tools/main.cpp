#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "annealcert/config.hpp"
#include "annealcert/errors.hpp"
#include "annealcert/harness.hpp"
#include "annealcert/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailVerdict = 1;
constexpr int kExitError = 2;

// Precedence: --out flag, then the config's output.directory, then the
// ANNEALCERT_OUT_DIR environment variable, then "out". The environment
// variable only replaces the built-in default, never an explicit choice.
std::string resolve_output_dir(const std::string& flag_value,
                               const annealcert::ExperimentConfig& config) {
  if (!flag_value.empty()) return flag_value;
  if (config.directory) return *config.directory;
  if (const char* env = std::getenv("ANNEALCERT_OUT_DIR"); env && *env) return env;
  return "out";
}

void print_config_error(const annealcert::ConfigError& e) {
  std::cerr << "config error [" << e.category() << "]";
  if (!e.path().empty()) std::cerr << " at " << e.path();
  std::cerr << ": " << e.message() << "\n";
}

int cmd_validate(const std::string& config_path) {
  const annealcert::ExperimentConfig config = annealcert::load_config(config_path);
  std::cout << config_path << ": valid\n";
  if (!config.defaults_applied.empty()) {
    std::cout << "defaults applied:\n";
    for (const std::string& note : config.defaults_applied) {
      std::cout << "  " << note << "\n";
    }
  }
  return kExitOk;
}

int cmd_run(const std::string& config_path, const std::string& out_flag, std::uint64_t steps,
            bool steps_set, std::uint64_t seed, bool seed_set, const std::string& format_flag) {
  annealcert::ExperimentConfig config = annealcert::load_config(config_path);
  if (steps_set) {
    config.steps = static_cast<std::size_t>(steps);
    annealcert::validate_steps_alignment(config);
  }
  if (seed_set) config.seed = seed;
  if (!format_flag.empty()) config.format = annealcert::parse_output_format(format_flag);

  const annealcert::ExperimentReport report = annealcert::run(config);
  const auto written = annealcert::emit(report, config.format,
                                        resolve_output_dir(out_flag, config));

  for (const auto& point : report.points) {
    std::cout << "T=" << point.total_time << " scale=" << point.error_scale
              << " v=" << point.bound.v << " distance=" << point.bound.distance_measured
              << " verdict=" << annealcert::verdict_name(point.bound.verdict) << "\n";
  }
  const annealcert::Verdict overall = annealcert::overall_verdict(report);
  std::cout << "overall: " << annealcert::verdict_name(overall) << "\n";
  for (const auto& path : written) std::cout << "wrote " << path.string() << "\n";

  return overall == annealcert::Verdict::Fail ? kExitFailVerdict : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulates quantum anneals under deterministic control errors and "
      "certifies the distance, overlap and target-amplitude bounds."};
  app.require_subcommand(1);

  std::string run_config;
  std::string out_dir;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::string format;
  CLI::App* run_cmd = app.add_subcommand("run", "Run the experiment described by a config file");
  run_cmd->add_option("config", run_config, "Path to the JSON config")->required();
  run_cmd->add_option("--out", out_dir, "Output directory (default: ANNEALCERT_OUT_DIR or out)");
  CLI::Option* steps_opt =
      run_cmd->add_option("--steps", steps, "Override the integrator step count");
  CLI::Option* seed_opt = run_cmd->add_option("--seed", seed, "Override the sampling seed");
  run_cmd->add_option("--format", format, "Output format: csv, report or both")
      ->check(CLI::IsMember({"csv", "report", "both"}));

  std::string validate_config;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check a config file and report applied defaults");
  validate_cmd->add_option("config", validate_config, "Path to the JSON config")->required();

  CLI::App* selftest_cmd = app.add_subcommand(
      "oracle-selftest", "Cross-check the closed-form references and the propagator");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return cmd_run(run_config, out_dir, steps, steps_opt->count() > 0, seed,
                     seed_opt->count() > 0, format);
    }
    if (validate_cmd->parsed()) {
      return cmd_validate(validate_config);
    }
    if (selftest_cmd->parsed()) {
      return annealcert::oracle_selftest(std::cout) ? kExitOk : kExitFailVerdict;
    }
  } catch (const annealcert::ConfigError& e) {
    print_config_error(e);
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
