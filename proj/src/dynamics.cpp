#include "annealcert/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "annealcert/eigensolve.hpp"
#include "annealcert/errors.hpp"

namespace annealcert {

AnnealSpec::AnnealSpec(HermitianOperator driver_in, HermitianOperator problem_in,
                       Schedule schedule_in, QuantumState initial_state_in)
    : driver(std::move(driver_in)),
      problem(std::move(problem_in)),
      schedule(std::move(schedule_in)),
      initial_state(std::move(initial_state_in)) {
  if (driver.dim() != problem.dim() || driver.dim() != initial_state.dim())
    throw DimensionError("driver, problem and initial state must share a dimension");
}

AnnealSpec AnnealSpec::standard(HermitianOperator problem, Schedule schedule) {
  const std::size_t dim = problem.dim();
  std::size_t n_qubits = 0;
  while ((std::size_t{1} << n_qubits) < dim) ++n_qubits;
  if ((std::size_t{1} << n_qubits) != dim)
    throw DimensionError("problem dimension is not a power of two");
  return AnnealSpec(transverse_field_driver(n_qubits), std::move(problem), std::move(schedule),
                    QuantumState::uniform_superposition(n_qubits));
}

HermitianOperator AnnealSpec::transverse_field_driver(std::size_t n_qubits) {
  std::vector<PauliTerm> terms;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    std::string word(n_qubits, 'I');
    word[q] = 'X';
    terms.push_back({-1.0, std::move(word)});
  }
  return from_pauli_terms(terms, n_qubits);
}

HermitianOperator AnnealSpec::ising_problem(std::size_t n_qubits,
                                            const std::vector<double>& fields,
                                            const std::vector<IsingCoupling>& couplings) {
  if (fields.size() != n_qubits)
    throw DimensionError("fields length " + std::to_string(fields.size()) + " != n_qubits " +
                         std::to_string(n_qubits));
  std::vector<PauliTerm> terms;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if (fields[q] == 0.0) continue;
    std::string word(n_qubits, 'I');
    word[q] = 'Z';
    terms.push_back({fields[q], std::move(word)});
  }
  for (const IsingCoupling& c : couplings) {
    if (c.i >= n_qubits || c.j >= n_qubits) throw DimensionError("coupling index out of range");
    if (c.i == c.j) throw DimensionError("coupling must join two distinct qubits");
    std::string word(n_qubits, 'I');
    word[c.i] = 'Z';
    word[c.j] = 'Z';
    terms.push_back({c.strength, std::move(word)});
  }
  return from_pauli_terms(terms, n_qubits);
}

Trajectory::Trajectory(std::vector<double> times, std::vector<QuantumState> states)
    : times_(std::move(times)), states_(std::move(states)) {
  if (times_.size() != states_.size() || times_.empty())
    throw DimensionError("trajectory times and states must align and be non-empty");
  for (const QuantumState& s : states_)
    if (std::abs(s.norm() - 1.0) > kTrajectoryNormTolerance)
      throw StateError("trajectory state norm drifted beyond tolerance");
}

HermitianOperator hamiltonian_at(const AnnealSpec& spec, double t) {
  const double s = spec.schedule.value(t);  // validates t in [0, T]
  const std::size_t dim = spec.dim();
  std::vector<cx> a(dim * dim);
  kernels::scaled_sum(a.data(), 1.0 - s, spec.driver.data(), s, spec.problem.data(), dim * dim);
  return HermitianOperator(dim, std::move(a));
}

HermitianOperator error_at(const ErrorModel& model, double t, double total_time) {
  return model.at(t, total_time);
}

namespace {

// One midpoint-exponential step: psi <- Q exp(-i dt L) Q^dag psi where
// (L, Q) is the eigensystem of the midpoint Hamiltonian.
void apply_step(const EigenDecomposition& ed, double dt, std::vector<cx>& psi,
                std::vector<cx>& scratch) {
  const std::size_t n = ed.dim;
  kernels::matvec_adjoint(ed.eigenvectors.data(), n, psi.data(), scratch.data());
  kernels::phase_rotate(scratch.data(), ed.eigenvalues.data(), dt, n);
  kernels::matvec(ed.eigenvectors.data(), n, scratch.data(), psi.data());
}

double grid_time(double total_time, std::size_t k, std::size_t steps) {
  if (k == steps) return total_time;
  return total_time * static_cast<double>(k) / static_cast<double>(steps);
}

}  // namespace

Trajectory evolve(const HamiltonianFn& h, const QuantumState& psi0, double total_time,
                  std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("evolve needs at least one step");
  if (total_time < 0.0) throw std::invalid_argument("evolve needs a nonnegative total time");

  const std::size_t n = psi0.dim();
  const double dt = total_time / static_cast<double>(steps);

  std::vector<double> times;
  std::vector<QuantumState> states;
  times.reserve(steps + 1);
  states.reserve(steps + 1);
  times.push_back(0.0);
  states.push_back(psi0);

  std::vector<cx> psi = psi0.amplitudes();
  std::vector<cx> scratch(n);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t_mid = total_time * (static_cast<double>(k) + 0.5) / static_cast<double>(steps);
    const HermitianOperator hk = h(t_mid);
    if (hk.dim() != n) throw DimensionError("hamiltonian dimension changed during evolution");
    const EigenDecomposition ed = hermitian_eigendecomposition(hk.data(), n);
    apply_step(ed, dt, psi, scratch);
    times.push_back(grid_time(total_time, k + 1, steps));
    states.emplace_back(psi, kTrajectoryNormTolerance);
  }
  return Trajectory(std::move(times), std::move(states));
}

namespace {

QuantumState final_state_only(const HamiltonianFn& h, const QuantumState& psi0, double total_time,
                              std::size_t steps) {
  const std::size_t n = psi0.dim();
  std::vector<cx> psi = psi0.amplitudes();
  std::vector<cx> scratch(n);
  const double dt = total_time / static_cast<double>(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t_mid = total_time * (static_cast<double>(k) + 0.5) / static_cast<double>(steps);
    const HermitianOperator hk = h(t_mid);
    const EigenDecomposition ed = hermitian_eigendecomposition(hk.data(), n);
    apply_step(ed, dt, psi, scratch);
  }
  return QuantumState(std::move(psi), kTrajectoryNormTolerance);
}

}  // namespace

EvolvedPair evolve_pair(const AnnealSpec& spec, const ErrorModel& model, std::size_t steps,
                        bool with_error_estimate) {
  if (model.dim() != spec.dim())
    throw DimensionError("error model dimension does not match the anneal spec");
  const double T = spec.total_time();

  const HamiltonianFn ideal_h = [&spec](double t) { return hamiltonian_at(spec, t); };
  const HamiltonianFn perturbed_h = [&spec, &model, T](double t) {
    const HermitianOperator h = hamiltonian_at(spec, t);
    const std::size_t dim = h.dim();
    std::vector<cx> a = h.elements();
    const double g = model.envelope().value(t, T);
    kernels::accumulate_scaled(a.data(), g, model.shape().data(), dim * dim);
    return HermitianOperator(dim, std::move(a));
  };

  EvolvedPair out{evolve(ideal_h, spec.initial_state, T, steps),
                  evolve(perturbed_h, spec.initial_state, T, steps)};

  if (with_error_estimate && steps >= 2) {
    // Order-2 step doubling: err(fine) ~= |fine - coarse| / 3.
    const std::size_t coarse = steps / 2;
    const QuantumState ideal_coarse = final_state_only(ideal_h, spec.initial_state, T, coarse);
    const QuantumState pert_coarse = final_state_only(perturbed_h, spec.initial_state, T, coarse);
    out.ideal_error_estimate = distance(out.ideal.final_state(), ideal_coarse) / 3.0;
    out.perturbed_error_estimate = distance(out.perturbed.final_state(), pert_coarse) / 3.0;
  }
  return out;
}

std::size_t default_step_count(const AnnealSpec& spec, const ErrorModel& model) {
  const double h_bound = std::max(spectral_norm(spec.driver), spectral_norm(spec.problem));
  const double v_bound = model.envelope().sup_abs() * spectral_norm(model.shape());
  const double action = kStepsPerUnitAction * spec.total_time() * (h_bound + v_bound);
  return std::max<std::size_t>(kMinSteps, static_cast<std::size_t>(std::ceil(action)));
}

std::size_t default_step_count(const HamiltonianFn& h, double total_time) {
  constexpr std::size_t kSamples = 64;
  double worst = 0.0;
  for (std::size_t i = 0; i <= kSamples; ++i) {
    const double t = total_time * static_cast<double>(i) / static_cast<double>(kSamples);
    worst = std::max(worst, spectral_norm(h(t)));
  }
  const double action = kStepsPerUnitAction * total_time * worst;
  return std::max<std::size_t>(kMinSteps, static_cast<std::size_t>(std::ceil(action)));
}

}  // namespace annealcert
