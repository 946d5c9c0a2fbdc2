#pragma once

#include <cstddef>

#include "annealcert/dynamics.hpp"
#include "annealcert/error_model.hpp"

// The certificates: error budget v = integral of |V(t)|, the distance bound
// |psi(T) - phi(T)| <= v, the overlap lower bound 1 - v^2/2, the target
// amplitude lower bound, the two threshold flags, and the certify() verdict
// that checks all of them against a measured trajectory pair.

namespace annealcert {

inline constexpr std::size_t kDefaultQuadraturePanels = 256;
// Numerical-error envelope for certify(): violations below
//   kIntegratorEstimateSafety * integrator_estimate + quadrature_estimate
//   + kCertifyBaseTolerance
// are INCONCLUSIVE rather than FAIL, since the step-doubling estimate is an
// estimate, not a rigorous bound.
inline constexpr double kIntegratorEstimateSafety = 10.0;
inline constexpr double kCertifyBaseTolerance = 1e-12;

struct ErrorBudget {
  double v = 0.0;                          // integral of |V(t)| over the interval
  double sup_norm = 0.0;                   // max over the whole run of |V(t)|
  double quadrature_error_estimate = 0.0;  // Richardson estimate; 0 on analytic paths
};

// Budget over the full run [0, total_time]. `panels` is the composite
// Simpson resolution (even, >= 2); envelopes with a closed-form |integral|
// (constant, linear) take an analytic fast path with zero estimate.
ErrorBudget error_budget(const ErrorModel& model, double total_time,
                         std::size_t panels = kDefaultQuadraturePanels);

// Budget over a subinterval [t0, t1] of a run of length total_time (the
// envelope is parameterized by normalized time, so the run length matters).
// Always quadrature-based; used by the additivity checks. sup_norm still
// refers to the whole run.
ErrorBudget error_budget_interval(const ErrorModel& model, double t0, double t1,
                                  double total_time,
                                  std::size_t panels = kDefaultQuadraturePanels);

struct DistanceBound {
  double bound = 0.0;
  // v < 2; past that the bound is vacuous because the distance between unit
  // vectors never exceeds 2.
  bool meaningful = true;
};

DistanceBound distance_bound(double v);

// 1 - v^2/2, the guaranteed lower bound on Re<psi(T)|phi(T)>. May be
// negative; callers decide whether a vacuous bound is acceptable.
double overlap_lower_bound(double v);

// (1 - v^2/2 - epsilon) / sqrt(1 - epsilon^2), the guaranteed lower bound
// on the perturbed target amplitude |D_m|. Throws ConditionViolatedError
// unless 1 - v^2/2 > epsilon; outside that condition the bound carries no
// information and a negative "bound" would only mislead.
double amplitude_lower_bound(double v, double epsilon);

struct ThresholdFlags {
  // sup_t |V(t)| < sqrt(2)/T, strictly.
  bool pointwise = false;
  // v < sqrt(2 (1 - epsilon)), strictly; equivalent to the amplitude-bound
  // condition 1 - v^2/2 > epsilon.
  bool budget = false;
};

// Pure arithmetic form, for table-driven checks.
ThresholdFlags threshold_flags(double sup_norm, double v, double total_time, double epsilon);

ThresholdFlags threshold_check(const ErrorModel& model, double total_time, double epsilon,
                               std::size_t panels = kDefaultQuadraturePanels);

// Ordered by severity so the overall verdict is the max of the parts.
enum class Verdict {
  Verified = 0,           // inequality holds outright
  Inconclusive = 1,       // violated, but by less than the numerical envelope
  ConditionViolated = 2,  // amplitude bound not applicable (1 - v^2/2 <= epsilon)
  Fail = 3,               // violated beyond the envelope
};

const char* verdict_name(Verdict v);
Verdict worst_verdict(Verdict a, Verdict b);

struct BoundReport {
  // Budget and numerics.
  double v = 0.0;
  double sup_norm = 0.0;
  double quadrature_error_estimate = 0.0;
  double integrator_error_estimate = 0.0;
  double envelope = 0.0;  // the combined tolerance used for verdicts
  double total_time = 0.0;

  // Theorem: distance.
  double distance_measured = 0.0;
  double distance_bound = 0.0;
  bool distance_bound_meaningful = true;
  Verdict distance_verdict = Verdict::Verified;

  // Theorem: overlap. overlap_measured is the real part, the quantity the
  // bound constrains; abs_overlap is reported for interpretability only.
  double overlap_measured = 0.0;
  double abs_overlap = 0.0;
  double overlap_lower = 0.0;
  Verdict overlap_verdict = Verdict::Verified;

  // Corollary: target amplitude. amplitude_lower is NaN when the validity
  // condition fails (amplitude_verdict == ConditionViolated).
  double epsilon = 0.0;
  std::size_t m = 0;
  double amplitude_measured = 0.0;
  double amplitude_lower = 0.0;
  Verdict amplitude_verdict = Verdict::Verified;
  bool condition_ok = true;

  // Threshold flags (strict inequalities).
  bool threshold_pointwise = false;
  bool threshold_budget = false;

  Verdict verdict = Verdict::Verified;
};

// Measures distance, overlap and the target amplitude on the final states
// of the pair and checks each against its bound. epsilon and m come from
// the error-free state (see target_index) or a config override.
BoundReport certify(const EvolvedPair& pair, const ErrorBudget& budget, double epsilon,
                    std::size_t m);

}  // namespace annealcert
