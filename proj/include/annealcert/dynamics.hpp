#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "annealcert/error_model.hpp"
#include "annealcert/operators.hpp"
#include "annealcert/schedule.hpp"

// Time-dependent Hamiltonians H(t) = (1-s(t)) driver + s(t) problem and the
// midpoint-exponential propagator that evolves the ideal and perturbed
// Schrodinger equations on a shared uniform grid. Each step applies the
// exact exponential of the midpoint Hamiltonian (via Hermitian
// eigendecomposition), so the map is unitary up to eigensolve round-off.

namespace annealcert {

inline constexpr double kTrajectoryNormTolerance = 1e-9;
inline constexpr std::size_t kMinSteps = 1000;
inline constexpr double kStepsPerUnitAction = 100.0;

struct AnnealSpec {
  HermitianOperator driver;
  HermitianOperator problem;
  Schedule schedule;
  QuantumState initial_state;

  AnnealSpec(HermitianOperator driver_in, HermitianOperator problem_in, Schedule schedule_in,
             QuantumState initial_state_in);

  // Driver defaults to the transverse field -sum_i X_i, initial state to the
  // uniform superposition (that driver's ground state).
  static AnnealSpec standard(HermitianOperator problem, Schedule schedule);

  static HermitianOperator transverse_field_driver(std::size_t n_qubits);

  struct IsingCoupling {
    std::size_t i = 0;
    std::size_t j = 0;
    double strength = 0.0;
  };
  // sum_i fields[i] Z_i + sum couplings J_ij Z_i Z_j
  static HermitianOperator ising_problem(std::size_t n_qubits, const std::vector<double>& fields,
                                         const std::vector<IsingCoupling>& couplings);

  std::size_t dim() const { return driver.dim(); }
  double total_time() const { return schedule.total_time(); }
};

class Trajectory {
 public:
  // Validates that every state is normalized within kTrajectoryNormTolerance.
  Trajectory(std::vector<double> times, std::vector<QuantumState> states);

  const std::vector<double>& times() const { return times_; }
  const std::vector<QuantumState>& states() const { return states_; }
  std::size_t step_count() const { return times_.size() - 1; }
  const QuantumState& initial_state() const { return states_.front(); }
  const QuantumState& final_state() const { return states_.back(); }
  double total_time() const { return times_.back(); }

 private:
  std::vector<double> times_;
  std::vector<QuantumState> states_;
};

using HamiltonianFn = std::function<HermitianOperator(double)>;

// (1 - s(t)) driver + s(t) problem; t must lie in [0, T].
HermitianOperator hamiltonian_at(const AnnealSpec& spec, double t);

// The perturbation V(t) at time t of a run with the given total time.
HermitianOperator error_at(const ErrorModel& model, double t, double total_time);

// Midpoint-exponential propagation of i d/dt psi = h(t) psi over [0, T]
// with `steps` uniform steps; returns the state at every grid point.
Trajectory evolve(const HamiltonianFn& h, const QuantumState& psi0, double total_time,
                  std::size_t steps);

struct EvolvedPair {
  Trajectory ideal;      // under H(t)
  Trajectory perturbed;  // under H(t) + V(t), same grid and initial state
  // Step-doubling (Richardson) estimates of the final-state error of each
  // trajectory; zero when the estimate was not requested.
  double ideal_error_estimate = 0.0;
  double perturbed_error_estimate = 0.0;

  double integrator_error_estimate() const {
    return ideal_error_estimate + perturbed_error_estimate;
  }
};

EvolvedPair evolve_pair(const AnnealSpec& spec, const ErrorModel& model, std::size_t steps,
                        bool with_error_estimate = true);

// max(kMinSteps, ceil(100 T B)) where B bounds max_t |H(t) + V(t)| via the
// triangle inequality; keeps local truncation error well below the
// bound-verification tolerances.
std::size_t default_step_count(const AnnealSpec& spec, const ErrorModel& model);

// Same rule for a generic Hamiltonian; the norm bound is taken as the max
// of |h(t)| over a coarse sampling grid.
std::size_t default_step_count(const HamiltonianFn& h, double total_time);

}  // namespace annealcert
