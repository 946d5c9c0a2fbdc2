#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "annealcert/kernels.hpp"

// States, Hermitian operators and Pauli-string construction, plus the
// norm/distance/overlap primitives everything else is measured with.
// All types are immutable after construction; operations are pure.

namespace annealcert {

using cx = kernels::cx;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxQubits = 12;

// Normalized amplitude vector over the 2^n computational basis.
class QuantumState {
 public:
  // The amplitude count must be a power of two; the norm must be within
  // norm_tol of 1 (1e-12 for freshly constructed states; the propagator
  // uses a looser 1e-9 for evolved states).
  explicit QuantumState(std::vector<cx> amplitudes, double norm_tol = kNormTolerance);

  static QuantumState basis_state(std::size_t n_qubits, std::size_t index);
  static QuantumState uniform_superposition(std::size_t n_qubits);

  const std::vector<cx>& amplitudes() const { return amps_; }
  const cx* data() const { return amps_.data(); }
  std::size_t dim() const { return amps_.size(); }
  std::size_t n_qubits() const { return n_qubits_; }
  double norm() const;

 private:
  std::vector<cx> amps_;
  std::size_t n_qubits_;
};

// Dense Hermitian matrix (row-major). Construction rejects, rather than
// repairs, matrices that differ from their conjugate transpose by more
// than kHermiticityTolerance.
class HermitianOperator {
 public:
  HermitianOperator(std::size_t dim, std::vector<cx> row_major);

  static HermitianOperator zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const cx* data() const { return a_.data(); }
  const std::vector<cx>& elements() const { return a_; }
  cx operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

 private:
  std::size_t dim_;
  std::vector<cx> a_;
};

// One weighted Pauli word; the word string runs over {I,X,Y,Z} with the
// leftmost character acting on the most significant basis-index bit.
struct PauliTerm {
  double coefficient = 0.0;
  std::string word;
};

// coefficient * tensor product of the named single-qubit Paulis.
// n_qubits above max_qubits is rejected (the dense matrix would blow up).
HermitianOperator pauli_string(const PauliTerm& term, std::size_t n_qubits,
                               std::size_t max_qubits = kDefaultMaxQubits);

// Dense sum of Pauli terms.
HermitianOperator from_pauli_terms(std::span<const PauliTerm> terms, std::size_t n_qubits,
                                   std::size_t max_qubits = kDefaultMaxQubits);

// Largest |eigenvalue|, via full Hermitian eigensolve.
double spectral_norm(const HermitianOperator& a);

// Euclidean distance ||a - b||_2 between amplitude vectors. Equals
// sqrt(2 - 2 Re<a|b>) for normalized inputs; lies in [0, 2].
double distance(const QuantumState& a, const QuantumState& b);

// <a|b>, conjugate-linear in the first argument.
cx overlap(const QuantumState& a, const QuantumState& b);

}  // namespace annealcert
