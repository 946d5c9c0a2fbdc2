#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "annealcert/bounds.hpp"
#include "annealcert/dynamics.hpp"
#include "annealcert/error_model.hpp"

// Experiment configuration: a strict, versioned JSON schema parsed into
// validated domain objects. Errors are split by phase - parse (line/column),
// schema (field path, wrong shape/type/value form), semantic (field path,
// cross-field inconsistency) - so callers can report them distinctly.

namespace annealcert {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Csv, Report, Both };

// Accepts "csv" | "report" | "both"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(const std::string& name);
const char* output_format_name(OutputFormat format);

struct ExperimentConfig {
  int schema_version = kSchemaVersion;

  // System: problem = sum_i fields[i] Z_i + sum couplings J_ij Z_i Z_j.
  std::size_t n_qubits = 1;
  std::vector<double> fields;
  std::vector<AnnealSpec::IsingCoupling> couplings;
  std::string driver = "transverse_field";  // "transverse_field" | "none"
  // Initial computational-basis state; empty means the uniform
  // superposition (the transverse-field driver's ground state).
  std::optional<std::size_t> initial_basis;

  Schedule schedule = Schedule::linear(1.0);

  // Error model description, kept in parameter form so the echo can
  // reproduce the run; build_error_model assembles the operator. Only the
  // fields for the named kind are meaningful.
  std::string error_kind = "none";
  PauliAxis error_axis = PauliAxis::Z;        // static_field_bias
  std::vector<double> error_strengths;        // static_field_bias
  std::vector<CouplingDelta> error_deltas;    // coupling_deviation
  std::vector<PauliTerm> error_terms;         // custom
  Envelope error_envelope = Envelope::constant(1.0);

  // Integrator steps; empty means auto (default_step_count per point).
  std::optional<std::size_t> steps;
  std::size_t panels = kDefaultQuadraturePanels;

  std::size_t shots = 4096;
  std::uint64_t seed = 1;
  // Overrides of the measured target index / leakage, for hypothesis tests.
  std::optional<std::size_t> target;
  std::optional<double> epsilon_override;

  // Sweep axes (cross product). Default to the schedule's total time and a
  // unit scale, i.e. a single point.
  std::vector<double> total_times;
  std::vector<double> error_scales;

  // Output directory; empty defers to the CLI flag / environment default.
  std::optional<std::string> directory;
  OutputFormat format = OutputFormat::Both;

  // "field = value" notes for every default the loader filled in, echoed
  // into reports so a config round-trips without guesswork.
  std::vector<std::string> defaults_applied;
};

// Parses and validates a config document. Throws ConfigParseError,
// ConfigSchemaError or ConfigSemanticError.
ExperimentConfig parse_config(const std::string& json_text);

// parse_config over the file's contents; missing/unreadable files raise
// ConfigError with category "io".
ExperimentConfig load_config(const std::filesystem::path& path);

// The effective configuration (defaults applied) as canonical JSON with
// sorted keys; deterministic for identical configs.
std::string config_echo(const ExperimentConfig& config);

// Jumpy error envelopes must land exactly on integrator grid points; called
// by parse_config and again by anything that overrides `steps` afterwards.
// Throws ConfigSemanticError on misalignment.
void validate_steps_alignment(const ExperimentConfig& config);

// Domain objects for one sweep point.
AnnealSpec build_spec(const ExperimentConfig& config, double total_time);
ErrorModel build_error_model(const ExperimentConfig& config, double error_scale);

struct SweepPoint {
  double total_time = 0.0;
  double error_scale = 1.0;
};

// Cross product of the sweep axes, sorted by (total_time, error_scale).
std::vector<SweepPoint> sweep_points(const ExperimentConfig& config);

}  // namespace annealcert
