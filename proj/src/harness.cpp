#include "annealcert/harness.hpp"

#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace annealcert {

namespace {

using nlohmann::json;

PointResult run_point(const ExperimentConfig& config, const SweepPoint& point) {
  const AnnealSpec spec = build_spec(config, point.total_time);
  const ErrorModel model = build_error_model(config, point.error_scale);
  const std::size_t steps = config.steps ? *config.steps : default_step_count(spec, model);

  const EvolvedPair pair = evolve_pair(spec, model, steps);
  const ErrorBudget budget = error_budget(model, point.total_time, config.panels);

  // Target and leakage from the error-free state, unless overridden.
  const TargetInfo measured = target_index(pair.ideal.final_state());
  const std::size_t m = config.target.value_or(measured.m);
  double epsilon;
  if (config.epsilon_override) {
    epsilon = *config.epsilon_override;
  } else if (m == measured.m) {
    epsilon = measured.epsilon;
  } else {
    const double p = std::norm(pair.ideal.final_state().amplitudes()[m]);
    epsilon = std::sqrt(std::max(0.0, 1.0 - p));
  }

  PointResult result;
  result.total_time = point.total_time;
  result.error_scale = point.error_scale;
  result.steps = steps;
  result.bound = certify(pair, budget, epsilon, m);
  result.point_seed = mix_seed(mix_seed(config.seed, std::bit_cast<std::uint64_t>(point.total_time)),
                               std::bit_cast<std::uint64_t>(point.error_scale));
  result.record = sample(pair.perturbed.final_state(), config.shots, result.point_seed, m);
  result.expected_reps =
      result.bound.condition_ok
          ? expected_repetitions(result.bound.amplitude_lower * result.bound.amplitude_lower)
          : std::numeric_limits<double>::quiet_NaN();
  return result;
}

std::string fmt(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

const char* fmt(bool b) { return b ? "true" : "false"; }

json bound_to_json(const BoundReport& b) {
  json amplitude{{"measured", b.amplitude_measured},
                 {"epsilon", b.epsilon},
                 {"m", b.m},
                 {"verdict", verdict_name(b.amplitude_verdict)}};
  // NaN serializes as null, which is exactly what a non-applicable bound is.
  amplitude["lower"] = b.amplitude_lower;

  return json{
      {"budget",
       {{"v", b.v},
        {"sup_norm", b.sup_norm},
        {"quadrature_error_estimate", b.quadrature_error_estimate}}},
      {"numerics",
       {{"integrator_error_estimate", b.integrator_error_estimate}, {"envelope", b.envelope}}},
      {"distance",
       {{"measured", b.distance_measured},
        {"bound", b.distance_bound},
        {"meaningful", b.distance_bound_meaningful},
        {"verdict", verdict_name(b.distance_verdict)}}},
      {"overlap",
       {{"measured_real", b.overlap_measured},
        {"measured_abs", b.abs_overlap},
        {"lower", b.overlap_lower},
        {"verdict", verdict_name(b.overlap_verdict)}}},
      {"amplitude", std::move(amplitude)},
      {"threshold",
       {{"pointwise", b.threshold_pointwise},
        {"budget", b.threshold_budget},
        {"condition_ok", b.condition_ok}}},
      {"verdict", verdict_name(b.verdict)}};
}

json record_to_json(const SampleRecord& r) {
  json counts = json::object();
  for (const auto& [index, count] : r.counts) counts[std::to_string(index)] = count;
  json out{{"seed", r.seed}, {"shots", r.shots}, {"rng_id", r.rng_id},
           {"counts", std::move(counts)}};
  if (r.first_hit) {
    out["first_hit"] = *r.first_hit;
  } else {
    out["first_hit"] = nullptr;
  }
  return out;
}

}  // namespace

Verdict overall_verdict(const ExperimentReport& report) {
  Verdict verdict = Verdict::Verified;
  for (const PointResult& p : report.points) {
    verdict = worst_verdict(verdict, p.bound.verdict);
  }
  return verdict;
}

ExperimentReport run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepPoint> points = sweep_points(config);

  ExperimentReport report;
  report.config = config;
  report.points.resize(points.size());
  std::vector<std::string> errors(points.size());

  const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      report.points[idx] = run_point(config, points[idx]);
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }

  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      throw std::runtime_error("sweep point total_time=" + std::to_string(points[i].total_time) +
                               " error_scale=" + std::to_string(points[i].error_scale) + ": " +
                               errors[i]);
    }
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_csv(const ExperimentReport& report) {
  std::string out =
      "T,error_scale,v,distance,bound,overlap,overlap_lower,epsilon,amplitude,"
      "amplitude_lower,threshold_pointwise,threshold_budget,condition_ok,verdict\n";
  for (const PointResult& p : report.points) {
    const BoundReport& b = p.bound;
    out += fmt(p.total_time);
    out += ',';
    out += fmt(p.error_scale);
    out += ',';
    out += fmt(b.v);
    out += ',';
    out += fmt(b.distance_measured);
    out += ',';
    out += fmt(b.distance_bound);
    out += ',';
    out += fmt(b.overlap_measured);
    out += ',';
    out += fmt(b.overlap_lower);
    out += ',';
    out += fmt(b.epsilon);
    out += ',';
    out += fmt(b.amplitude_measured);
    out += ',';
    out += fmt(b.amplitude_lower);
    out += ',';
    out += fmt(b.threshold_pointwise);
    out += ',';
    out += fmt(b.threshold_budget);
    out += ',';
    out += fmt(b.condition_ok);
    out += ',';
    out += verdict_name(b.verdict);
    out += '\n';
  }
  return out;
}

std::string to_report_json(const ExperimentReport& report) {
  json points = json::array();
  for (const PointResult& p : report.points) {
    json expected = p.expected_reps;  // NaN -> null
    points.push_back({{"total_time", p.total_time},
                      {"error_scale", p.error_scale},
                      {"steps", p.steps},
                      {"point_seed", p.point_seed},
                      {"certificate", bound_to_json(p.bound)},
                      {"expected_repetitions", std::move(expected)},
                      {"sample", record_to_json(p.record)}});
  }
  const json doc{{"config", json::parse(config_echo(report.config))},
                 {"points", std::move(points)},
                 {"overall_verdict", verdict_name(overall_verdict(report))},
                 {"wall_seconds", report.wall_seconds}};
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit(const ExperimentReport& report, OutputFormat format,
                                        const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;

  const auto write_file = [&](const std::filesystem::path& name, const std::string& contents) {
    const std::filesystem::path path = directory / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out.good()) throw std::runtime_error("error while writing " + path.string());
    written.push_back(path);
  };

  if (format == OutputFormat::Csv || format == OutputFormat::Both) {
    write_file("summary.csv", to_csv(report));
  }
  if (format == OutputFormat::Report || format == OutputFormat::Both) {
    write_file("report.json", to_report_json(report));
  }
  return written;
}

}  // namespace annealcert
