#include "annealcert/measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "annealcert/errors.hpp"

namespace annealcert {

namespace {

// Per-trial cap: a draw-until-hit experiment that exceeds this many draws
// aborts the row rather than hanging on a vanishing target probability.
constexpr std::size_t kMaxDrawsPerTrial = 1u << 24;

double u53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> cumulative(const std::vector<double>& probs) {
  std::vector<double> cum(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cum[i] = acc;
  }
  return cum;
}

std::size_t draw_index(std::mt19937_64& rng, const std::vector<double>& cum) {
  const double u = u53(rng);
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  const auto idx = static_cast<std::size_t>(it - cum.begin());
  return std::min(idx, cum.size() - 1);
}

}  // namespace

BasisDistribution::BasisDistribution(const QuantumState& state)
    : amps_(state.amplitudes()), probs_(state.dim()) {
  double sum = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    probs_[i] = std::norm(amps_[i]);
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw StateError("basis probabilities sum to " + std::to_string(sum) +
                     ", expected 1 within " + std::to_string(kProbabilitySumTolerance));
  }
}

TargetInfo target_index(const QuantumState& error_free) {
  const std::vector<cx>& amps = error_free.amplitudes();
  std::size_t best = 0;
  double best_prob = std::norm(amps[0]);
  for (std::size_t n = 1; n < amps.size(); ++n) {
    const double p = std::norm(amps[n]);
    if (p > best_prob) {
      best = n;
      best_prob = p;
    }
  }
  return TargetInfo{best, std::sqrt(std::max(0.0, 1.0 - best_prob))};
}

SampleRecord sample(const QuantumState& state, std::size_t shots, std::uint64_t seed,
                    std::optional<std::size_t> target) {
  if (shots == 0) throw std::invalid_argument("shots must be at least 1");
  if (target && *target >= state.dim()) {
    throw std::invalid_argument("target index " + std::to_string(*target) +
                                " out of range for dimension " + std::to_string(state.dim()));
  }
  const BasisDistribution dist(state);
  const std::vector<double> cum = cumulative(dist.probabilities());

  SampleRecord record;
  record.seed = seed;
  record.shots = shots;
  std::mt19937_64 rng(seed);
  for (std::size_t shot = 1; shot <= shots; ++shot) {
    const std::size_t idx = draw_index(rng, cum);
    ++record.counts[idx];
    if (target && !record.first_hit && idx == *target) record.first_hit = shot;
  }
  return record;
}

double expected_repetitions(double p_lower) {
  if (!(p_lower > 0.0) || !(p_lower <= 1.0)) {
    throw std::invalid_argument("success probability lower bound must lie in (0, 1], got " +
                                std::to_string(p_lower));
  }
  return 1.0 / p_lower;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer over the combined words; cheap and well mixed.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<ConstantOrderRow> verify_constant_order(const AnnealSpec& spec,
                                                    const ErrorModel& model,
                                                    const std::vector<double>& total_times,
                                                    std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (total_times.empty()) throw std::invalid_argument("total_times must be non-empty");
  for (double t : total_times) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw std::invalid_argument("every run time must be positive and finite");
    }
  }

  const double base_time = spec.total_time();
  std::vector<ConstantOrderRow> rows;
  rows.reserve(total_times.size());

  for (double total_time : total_times) {
    ConstantOrderRow row;
    row.total_time = total_time;
    row.trials = trials;

    const AnnealSpec run_spec(spec.driver, spec.problem,
                              spec.schedule.with_total_time(total_time), spec.initial_state);
    const ErrorModel run_model = model.scaled(base_time / total_time);
    const ErrorBudget budget = error_budget(run_model, total_time);
    row.v = budget.v;

    const EvolvedPair pair =
        evolve_pair(run_spec, run_model, default_step_count(run_spec, run_model));
    const TargetInfo target = target_index(pair.ideal.final_state());
    row.m = target.m;
    row.epsilon = target.epsilon;
    row.condition_ok = 1.0 - 0.5 * budget.v * budget.v > target.epsilon;

    const BasisDistribution dist(pair.perturbed.final_state());
    row.target_probability = dist.probability(target.m);

    if (!row.condition_ok) {
      row.amplitude_lower = std::numeric_limits<double>::quiet_NaN();
      row.p_lower = 0.0;
      row.bound_repetitions = std::numeric_limits<double>::infinity();
      row.passed = false;
      rows.push_back(row);
      continue;
    }
    row.amplitude_lower = amplitude_lower_bound(budget.v, target.epsilon);
    row.p_lower = row.amplitude_lower * row.amplitude_lower;
    row.bound_repetitions = expected_repetitions(row.p_lower);

    // Independent draw-until-hit experiments, each counting the number of
    // measurements spent to see the target for the first time.
    const std::vector<double> cum = cumulative(dist.probabilities());
    std::mt19937_64 rng(mix_seed(seed, std::bit_cast<std::uint64_t>(total_time)));
    double sum = 0.0;
    double sum_sq = 0.0;
    bool capped = false;
    for (std::size_t trial = 0; trial < trials && !capped; ++trial) {
      std::size_t draws = 0;
      for (;;) {
        ++draws;
        if (draw_index(rng, cum) == target.m) break;
        if (draws >= kMaxDrawsPerTrial) {
          capped = true;
          break;
        }
      }
      sum += static_cast<double>(draws);
      sum_sq += static_cast<double>(draws) * static_cast<double>(draws);
    }
    if (capped) {
      row.empirical_mean_repetitions = std::numeric_limits<double>::infinity();
      row.passed = false;
      rows.push_back(row);
      continue;
    }
    const double n = static_cast<double>(trials);
    const double mean = sum / n;
    const double variance = std::max(0.0, sum_sq / n - mean * mean);
    row.empirical_mean_repetitions = mean;
    row.statistical_tolerance = 3.0 * std::sqrt(variance / n);
    row.passed = mean <= row.bound_repetitions + row.statistical_tolerance;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace annealcert
