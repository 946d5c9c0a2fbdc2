#include "annealcert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "annealcert/errors.hpp"

namespace annealcert {

namespace {

void require_even_panels(std::size_t panels) {
  if (panels < 2 || panels % 2 != 0) {
    throw std::invalid_argument("Simpson panel count must be even and at least 2, got " +
                                std::to_string(panels));
  }
}

// Composite Simpson for f over [a, b] with n panels (n even, >= 2).
template <typename F>
double simpson(const F& f, double a, double b, std::size_t n) {
  const double h = (b - a) / static_cast<double>(n);
  double sum = f(a) + f(b);
  for (std::size_t k = 1; k < n; ++k) {
    const double w = (k % 2 == 1) ? 4.0 : 2.0;
    sum += w * f(a + static_cast<double>(k) * h);
  }
  return sum * h / 3.0;
}

std::size_t round_up_to_multiple_of_4(std::size_t n) { return (n + 3) / 4 * 4; }

}  // namespace

ErrorBudget error_budget_interval(const ErrorModel& model, double t0, double t1,
                                  double total_time, std::size_t panels) {
  if (!(total_time > 0.0) || !std::isfinite(total_time)) {
    throw std::invalid_argument("total_time must be positive and finite");
  }
  if (!(t0 >= 0.0) || !(t1 >= t0) || !(t1 <= total_time)) {
    throw std::invalid_argument("error budget interval must satisfy 0 <= t0 <= t1 <= total_time");
  }
  require_even_panels(panels);

  const double shape_norm = spectral_norm(model.shape());
  const Envelope& env = model.envelope();

  ErrorBudget out;
  out.sup_norm = env.sup_abs() * shape_norm;
  if (!std::isfinite(out.sup_norm)) {
    throw std::invalid_argument("error model has a non-finite norm");
  }
  if (t1 == t0 || shape_norm == 0.0) return out;

  const bool full_interval = (t0 == 0.0 && t1 == total_time);
  if (full_interval && env.has_analytic_abs_integral()) {
    out.v = env.abs_integral(total_time) * shape_norm;
    return out;
  }

  // Quadrature of |envelope(t)| * shape_norm, split at envelope jumps so
  // Simpson only ever sees a continuous integrand.
  const auto g = [&](double t) { return std::abs(env.value(t, total_time)) * shape_norm; };

  std::vector<double> cuts{t0};
  for (double u : env.discontinuities()) {
    const double t = u * total_time;
    if (t > t0 && t < t1) cuts.push_back(t);
  }
  cuts.push_back(t1);
  std::sort(cuts.begin(), cuts.end());

  const double span = t1 - t0;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double a = cuts[p];
    const double b = cuts[p + 1];
    if (b <= a) continue;
    // value() is right-continuous, so g(a) already belongs to this piece.
    // At b a jump may sit exactly on the cut; sample the left limit by
    // stepping one ulp inward (exact for the ulp, off by slope * ulp
    // otherwise), else the endpoint picks up the other side of the jump
    // and leaves an O(gap * h) error the Richardson estimate cannot see.
    const double b_inside = std::nextafter(b, a);
    const auto piece = [&](double t) { return g(t == b ? b_inside : t); };
    // Panels proportional to piece length, at least 4 and a multiple of 4
    // so the half-resolution pass is still a valid Simpson rule.
    const auto share = static_cast<std::size_t>(
        std::ceil(static_cast<double>(panels) * (b - a) / span));
    const std::size_t n = std::max<std::size_t>(4, round_up_to_multiple_of_4(share));
    const double fine = simpson(piece, a, b, n);
    const double coarse = simpson(piece, a, b, n / 2);
    out.v += fine;
    out.quadrature_error_estimate += std::abs(fine - coarse) / 15.0;
  }
  if (!std::isfinite(out.v)) {
    throw std::invalid_argument("error budget quadrature produced a non-finite value");
  }
  return out;
}

ErrorBudget error_budget(const ErrorModel& model, double total_time, std::size_t panels) {
  return error_budget_interval(model, 0.0, total_time, total_time, panels);
}

DistanceBound distance_bound(double v) {
  if (!(v >= 0.0)) throw std::invalid_argument("error budget v must be non-negative");
  return DistanceBound{v, v < 2.0};
}

double overlap_lower_bound(double v) {
  if (!(v >= 0.0)) throw std::invalid_argument("error budget v must be non-negative");
  return 1.0 - 0.5 * v * v;
}

double amplitude_lower_bound(double v, double epsilon) {
  if (!(v >= 0.0)) throw std::invalid_argument("error budget v must be non-negative");
  if (!(epsilon >= 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1), got " + std::to_string(epsilon));
  }
  const double margin = 1.0 - 0.5 * v * v;
  if (!(margin > epsilon)) {
    throw ConditionViolatedError("amplitude bound requires 1 - v^2/2 > epsilon; got 1 - v^2/2 = " +
                                 std::to_string(margin) + " with epsilon = " +
                                 std::to_string(epsilon));
  }
  return (margin - epsilon) / std::sqrt(1.0 - epsilon * epsilon);
}

ThresholdFlags threshold_flags(double sup_norm, double v, double total_time, double epsilon) {
  if (!(sup_norm >= 0.0)) throw std::invalid_argument("sup_norm must be non-negative");
  if (!(v >= 0.0)) throw std::invalid_argument("error budget v must be non-negative");
  if (!(total_time > 0.0)) throw std::invalid_argument("total_time must be positive");
  if (!(epsilon >= 0.0) || !(epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  ThresholdFlags flags;
  flags.pointwise = sup_norm < std::sqrt(2.0) / total_time;
  flags.budget = v < std::sqrt(2.0 * (1.0 - epsilon));
  return flags;
}

ThresholdFlags threshold_check(const ErrorModel& model, double total_time, double epsilon,
                               std::size_t panels) {
  const ErrorBudget budget = error_budget(model, total_time, panels);
  return threshold_flags(budget.sup_norm, budget.v, total_time, epsilon);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "VERIFIED";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
    case Verdict::ConditionViolated:
      return "CONDITION_VIOLATED";
    case Verdict::Fail:
      return "FAIL";
  }
  return "UNKNOWN";
}

Verdict worst_verdict(Verdict a, Verdict b) { return a < b ? b : a; }

namespace {

// violation: how far the measured value crossed the bound (<= 0 means the
// inequality holds outright).
Verdict classify(double violation, double envelope) {
  if (violation <= 0.0) return Verdict::Verified;
  if (violation <= envelope) return Verdict::Inconclusive;
  return Verdict::Fail;
}

}  // namespace

BoundReport certify(const EvolvedPair& pair, const ErrorBudget& budget, double epsilon,
                    std::size_t m) {
  const Trajectory& ideal = pair.ideal;
  const Trajectory& perturbed = pair.perturbed;
  if (ideal.final_state().dim() != perturbed.final_state().dim()) {
    throw DimensionError("trajectory dimensions differ: " +
                         std::to_string(ideal.final_state().dim()) + " vs " +
                         std::to_string(perturbed.final_state().dim()));
  }
  if (ideal.times() != perturbed.times()) {
    throw std::invalid_argument("trajectory grids differ; certify needs a shared grid");
  }
  if (!(epsilon >= 0.0) || !(epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  const QuantumState& psi = ideal.final_state();
  const QuantumState& phi = perturbed.final_state();
  if (m >= phi.dim()) {
    throw std::invalid_argument("target index " + std::to_string(m) +
                                " out of range for dimension " + std::to_string(phi.dim()));
  }

  BoundReport r;
  r.v = budget.v;
  r.sup_norm = budget.sup_norm;
  r.quadrature_error_estimate = budget.quadrature_error_estimate;
  r.integrator_error_estimate = pair.integrator_error_estimate();
  r.envelope = kIntegratorEstimateSafety * r.integrator_error_estimate +
               budget.quadrature_error_estimate + kCertifyBaseTolerance;
  r.total_time = ideal.total_time();

  r.distance_measured = distance(psi, phi);
  const DistanceBound db = distance_bound(budget.v);
  r.distance_bound = db.bound;
  r.distance_bound_meaningful = db.meaningful;
  r.distance_verdict = classify(r.distance_measured - r.distance_bound, r.envelope);

  const cx ov = overlap(psi, phi);
  r.overlap_measured = ov.real();
  r.abs_overlap = std::abs(ov);
  r.overlap_lower = overlap_lower_bound(budget.v);
  r.overlap_verdict = classify(r.overlap_lower - r.overlap_measured, r.envelope);

  r.epsilon = epsilon;
  r.m = m;
  r.amplitude_measured = std::abs(phi.amplitudes()[m]);
  r.condition_ok = 1.0 - 0.5 * budget.v * budget.v > epsilon;
  if (r.condition_ok) {
    r.amplitude_lower = amplitude_lower_bound(budget.v, epsilon);
    r.amplitude_verdict = classify(r.amplitude_lower - r.amplitude_measured, r.envelope);
  } else {
    r.amplitude_lower = std::numeric_limits<double>::quiet_NaN();
    r.amplitude_verdict = Verdict::ConditionViolated;
  }

  const ThresholdFlags flags = threshold_flags(budget.sup_norm, budget.v, r.total_time, epsilon);
  r.threshold_pointwise = flags.pointwise;
  r.threshold_budget = flags.budget;

  r.verdict = worst_verdict(r.distance_verdict, worst_verdict(r.overlap_verdict, r.amplitude_verdict));
  return r;
}

}  // namespace annealcert
