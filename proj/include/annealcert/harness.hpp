#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "annealcert/bounds.hpp"
#include "annealcert/config.hpp"
#include "annealcert/measurement.hpp"

// Experiment orchestration: expands the sweep, runs every point (evolve,
// budget, certify, sample), and emits the CSV summary and the full
// structured report.

namespace annealcert {

struct PointResult {
  double total_time = 0.0;
  double error_scale = 1.0;
  std::size_t steps = 0;         // integrator steps actually used
  std::uint64_t point_seed = 0;  // derived stream seed for this point
  BoundReport bound;
  SampleRecord record;
  // Geometric guarantee 1/amplitude_lower^2; NaN when the validity
  // condition failed.
  double expected_reps = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<PointResult> points;  // sorted by (total_time, error_scale)
  double wall_seconds = 0.0;
};

Verdict overall_verdict(const ExperimentReport& report);

// Runs every sweep point; points are independent and run concurrently.
// Deterministic given the config (per-point seeds are derived from the
// config seed and the point coordinates, never from sweep position).
// Module errors are rethrown annotated with the point coordinates.
ExperimentReport run(const ExperimentConfig& config);

// Fixed-header CSV, one row per point. Floats are shortest round-trip so
// identical runs emit identical bytes.
std::string to_csv(const ExperimentReport& report);

// Full structured report: config echo, per-point certificates, samples,
// verdicts, diagnostics.
std::string to_report_json(const ExperimentReport& report);

// Writes summary.csv and/or report.json into `directory` (created if
// missing) per the format; returns the paths written.
std::vector<std::filesystem::path> emit(const ExperimentReport& report, OutputFormat format,
                                        const std::filesystem::path& directory);

}  // namespace annealcert
