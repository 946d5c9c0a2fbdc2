#pragma once

#include <cstddef>
#include <iosfwd>

#include "annealcert/dynamics.hpp"
#include "annealcert/operators.hpp"

// Independent references used to validate the propagator and the bound
// measurements: 1-qubit closed forms plus a Richardson-extrapolated
// high-accuracy numerical reference.

namespace annealcert {

struct ClosedFormPair {
  QuantumState psi_T;   // ideal final state
  QuantumState phi_T;   // perturbed final state
  double exact_distance = 0.0;
  cx exact_overlap = 0.0;
};

// H = (omega/2) Z, V = delta X, psi0 = |0>. The perturbed state follows the
// Rabi rotation about the tilted axis with frequency
// Omega = sqrt((omega/2)^2 + delta^2).
ClosedFormPair rabi_exact(double omega, double delta, double total_time);

// H = 0, V = lam Z, psi0 = |0> (an extremal eigenstate of V): the two final
// states differ by the pure phase exp(-i lam T), so the distance is
// 2 |sin(lam T / 2)| while the budget is v = lam T. The tightness probe.
ClosedFormPair commuting_exact(double lam, double total_time);

struct ReferenceState {
  QuantumState state;
  double error_estimate = 0.0;
  std::size_t steps_used = 0;
};

// Evolves at 8x the default step count and Richardson-extrapolates the
// final state from the (steps, 2 steps) pair.
ReferenceState richardson_reference(const HamiltonianFn& h, const QuantumState& psi0,
                                    double total_time);

// Cross-checks the oracles against each other and against the propagator.
// Prints one line per check; returns true when everything passed.
bool oracle_selftest(std::ostream& out);

}  // namespace annealcert
