#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annealcert/bounds.hpp"
#include "annealcert/dynamics.hpp"
#include "annealcert/operators.hpp"

// Computational-basis readout: target identification, seeded sampling, the
// geometric repetition bound, and the check that the expected number of
// repetitions to hit the target stays bounded by a constant independent of
// the run time.

namespace annealcert {

// Generator identity recorded in every SampleRecord so results stay
// reproducible across platforms: std::mt19937_64 mapped to [0,1) doubles by
// taking the top 53 bits, indices drawn by inverse CDF.
inline constexpr const char* kRngId = "mt19937_64/u53/inverse-cdf";

inline constexpr double kProbabilitySumTolerance = 1e-10;

// Probabilities |c_n|^2 over the computational basis, amplitudes retained
// for amplitude queries. Construction checks the probabilities sum to 1
// within kProbabilitySumTolerance.
class BasisDistribution {
 public:
  explicit BasisDistribution(const QuantumState& state);

  const std::vector<double>& probabilities() const { return probs_; }
  const std::vector<cx>& amplitudes() const { return amps_; }
  double probability(std::size_t n) const { return probs_.at(n); }
  cx amplitude(std::size_t n) const { return amps_.at(n); }
  std::size_t dim() const { return probs_.size(); }

 private:
  std::vector<cx> amps_;
  std::vector<double> probs_;
};

struct TargetInfo {
  std::size_t m = 0;
  double epsilon = 0.0;  // sqrt(1 - |C_m|^2), the target leakage
};

// Picks the most probable basis state of the error-free final state (ties
// broken toward the lowest index) and measures its leakage epsilon.
TargetInfo target_index(const QuantumState& error_free);

struct SampleRecord {
  std::uint64_t seed = 0;
  std::size_t shots = 0;
  std::map<std::size_t, std::size_t> counts;  // basis index -> occurrences
  // 1-based shot number of the first draw equal to `target`; empty when the
  // target never appeared (or none was requested). 1-based so the value is
  // the number of measurements spent to first success.
  std::optional<std::size_t> first_hit;
  std::string rng_id = kRngId;
};

// Draws `shots` i.i.d. basis indices from |amplitudes|^2. Deterministic
// given (state, shots, seed).
SampleRecord sample(const QuantumState& state, std::size_t shots, std::uint64_t seed,
                    std::optional<std::size_t> target = std::nullopt);

// Geometric law: success probability >= p_lower per measurement bounds the
// expected number of measurements to first success by 1/p_lower.
double expected_repetitions(double p_lower);

// Deterministically derives an independent RNG stream seed from a base seed
// and a salt (e.g. the bit pattern of a sweep coordinate), so concurrent
// records never share a stream.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

struct ConstantOrderRow {
  double total_time = 0.0;
  double v = 0.0;
  double epsilon = 0.0;
  std::size_t m = 0;
  bool condition_ok = false;
  double amplitude_lower = 0.0;  // NaN when the condition fails
  double p_lower = 0.0;          // amplitude_lower^2
  double bound_repetitions = 0.0;  // 1/p_lower, the T-independent guarantee
  double target_probability = 0.0;  // measured |D_m|^2
  double empirical_mean_repetitions = 0.0;
  double statistical_tolerance = 0.0;  // 3 sigma of the empirical mean
  std::size_t trials = 0;
  bool passed = false;
};

// For each run time T: rescales the error model by (base T)/T so every run
// shares the same budget v, evolves the pair, measures the perturbed target
// probability, and runs `trials` independent draw-until-hit experiments.
// A row passes when the empirical mean repetitions stay within the
// geometric bound 1/amplitude_lower^2 plus 3 sigma. Condition violations
// are reported per row; the run continues.
std::vector<ConstantOrderRow> verify_constant_order(const AnnealSpec& spec,
                                                    const ErrorModel& model,
                                                    const std::vector<double>& total_times,
                                                    std::size_t trials, std::uint64_t seed);

}  // namespace annealcert
