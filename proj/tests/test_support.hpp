#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "annealcert/operators.hpp"

// Shared generators for randomized tests. Every user seeds its own
// mt19937_64 so the files stay independent and reproducible.

namespace testsupport {

using annealcert::cx;

inline annealcert::QuantumState random_state(std::size_t n_qubits, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<cx> amps(dim);
  double norm_sq = 0.0;
  for (cx& a : amps) {
    a = cx(nd(gen), nd(gen));
    norm_sq += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (cx& a : amps) a *= inv;
  return annealcert::QuantumState(std::move(amps));
}

inline annealcert::HermitianOperator random_hermitian(std::size_t dim, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<cx> a(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a[i * dim + i] = cx(nd(gen), 0.0);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const cx z(nd(gen), nd(gen));
      a[i * dim + j] = z;
      a[j * dim + i] = std::conj(z);
    }
  }
  return annealcert::HermitianOperator(dim, std::move(a));
}

inline double max_abs_diff(const std::vector<cx>& a, const std::vector<cx>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  if (a.size() != b.size()) return 1e300;
  return worst;
}

}  // namespace testsupport
