#include "annealcert/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "annealcert/eigensolve.hpp"
#include "annealcert/errors.hpp"

namespace annealcert {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && std::has_single_bit(n); }

std::size_t log2_exact(std::size_t n) { return static_cast<std::size_t>(std::countr_zero(n)); }

}  // namespace

QuantumState::QuantumState(std::vector<cx> amplitudes, double norm_tol)
    : amps_(std::move(amplitudes)) {
  if (!is_power_of_two(amps_.size()))
    throw StateError("state length " + std::to_string(amps_.size()) + " is not a power of two");
  n_qubits_ = log2_exact(amps_.size());
  for (const cx& a : amps_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw StateError("state contains non-finite amplitudes");
  const double nrm = std::sqrt(kernels::norm_sq(amps_.data(), amps_.size()));
  if (std::abs(nrm - 1.0) > norm_tol)
    throw StateError("state norm " + std::to_string(nrm) + " deviates from 1 beyond tolerance " +
                     std::to_string(norm_tol));
}

QuantumState QuantumState::basis_state(std::size_t n_qubits, std::size_t index) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw DimensionError("basis index out of range");
  std::vector<cx> amps(dim, 0.0);
  amps[index] = 1.0;
  return QuantumState(std::move(amps));
}

QuantumState QuantumState::uniform_superposition(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<cx> amps(dim, cx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  return QuantumState(std::move(amps));
}

double QuantumState::norm() const { return std::sqrt(kernels::norm_sq(amps_.data(), amps_.size())); }

HermitianOperator::HermitianOperator(std::size_t dim, std::vector<cx> row_major)
    : dim_(dim), a_(std::move(row_major)) {
  if (dim_ == 0 || a_.size() != dim_ * dim_)
    throw DimensionError("matrix storage size " + std::to_string(a_.size()) +
                         " does not match dim " + std::to_string(dim_));
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      const cx d = a_[i * dim_ + j] - std::conj(a_[j * dim_ + i]);
      worst = std::max(worst, std::abs(d));
    }
  }
  if (!(worst <= kHermiticityTolerance))
    throw HermiticityError("matrix deviates from Hermiticity by " + std::to_string(worst));
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return HermitianOperator(dim, std::vector<cx>(dim * dim, 0.0));
}

HermitianOperator pauli_string(const PauliTerm& term, std::size_t n_qubits,
                               std::size_t max_qubits) {
  return from_pauli_terms(std::span<const PauliTerm>(&term, 1), n_qubits, max_qubits);
}

HermitianOperator from_pauli_terms(std::span<const PauliTerm> terms, std::size_t n_qubits,
                                   std::size_t max_qubits) {
  if (n_qubits == 0) throw DimensionError("need at least one qubit");
  if (n_qubits > max_qubits)
    throw DimensionError("n_qubits " + std::to_string(n_qubits) + " exceeds max " +
                         std::to_string(max_qubits) + " (dense matrix would be too large)");
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<cx> a(dim * dim, 0.0);
  for (const PauliTerm& term : terms) {
    if (term.word.size() != n_qubits)
      throw DimensionError("Pauli word '" + term.word + "' has length " +
                           std::to_string(term.word.size()) + ", expected " +
                           std::to_string(n_qubits));
    if (!std::isfinite(term.coefficient))
      throw std::invalid_argument("Pauli coefficient is not finite");
    std::uint64_t flip_mask = 0, sign_mask = 0;
    std::size_t n_y = 0;
    for (std::size_t q = 0; q < n_qubits; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - q);
      switch (term.word[q]) {
        case 'I':
          break;
        case 'X':
          flip_mask |= bit;
          break;
        case 'Y':
          flip_mask |= bit;
          sign_mask |= bit;
          ++n_y;
          break;
        case 'Z':
          sign_mask |= bit;
          break;
        default:
          throw std::invalid_argument(std::string("invalid Pauli letter '") + term.word[q] +
                                      "' (expected I, X, Y or Z)");
      }
    }
    // (-i)^{#Y} folds the per-qubit Y phases; with the (-1)^{r & sign_mask}
    // row sign this reproduces every matrix element of the word exactly.
    static constexpr cx kMinusIPow[4] = {cx(1, 0), cx(0, -1), cx(-1, 0), cx(0, 1)};
    const cx scaled = term.coefficient * kMinusIPow[n_y % 4];
    kernels::pauli_accumulate(a.data(), dim, scaled, flip_mask, sign_mask);
  }
  return HermitianOperator(dim, std::move(a));
}

double spectral_norm(const HermitianOperator& a) {
  const std::vector<double> evs = hermitian_eigenvalues(a.data(), a.dim());
  double worst = 0.0;
  for (double v : evs) worst = std::max(worst, std::abs(v));
  return worst;
}

double distance(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim())
    throw DimensionError("distance between states of dim " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
  return std::sqrt(kernels::diff_norm_sq(a.data(), b.data(), a.dim()));
}

cx overlap(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim())
    throw DimensionError("overlap between states of dim " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
  return kernels::dot(a.data(), b.data(), a.dim());
}

}  // namespace annealcert
