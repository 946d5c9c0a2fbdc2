#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Dense Hermitian eigensolver, wrapped so the linear-algebra backend stays
// out of the public headers. Input and output matrices are row-major.

namespace annealcert {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  // Unitary of eigenvectors, row-major; column k is the eigenvector for
  // eigenvalues[k].
  std::vector<std::complex<double>> eigenvectors;
  std::size_t dim = 0;
};

// Throws EigensolveError (with dimension and scale diagnostics) on
// non-convergence.
EigenDecomposition hermitian_eigendecomposition(const std::complex<double>* a, std::size_t n);
std::vector<double> hermitian_eigenvalues(const std::complex<double>* a, std::size_t n);

}  // namespace annealcert
