#include "annealcert/eigensolve.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <string>

#include "annealcert/errors.hpp"

namespace annealcert {

namespace {

using RowMajorMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

[[noreturn]] void throw_eigensolve_failure(const std::complex<double>* a, std::size_t n) {
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) max_abs = std::max(max_abs, std::abs(a[i]));
  throw EigensolveError("hermitian eigensolve did not converge (dim=" + std::to_string(n) +
                        ", max |entry|=" + std::to_string(max_abs) + ")");
}

}  // namespace

EigenDecomposition hermitian_eigendecomposition(const std::complex<double>* a, std::size_t n) {
  Eigen::Map<const RowMajorMatrix> m(a, static_cast<Eigen::Index>(n),
                                     static_cast<Eigen::Index>(n));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw_eigensolve_failure(a, n);

  EigenDecomposition out;
  out.dim = n;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.eigenvectors.resize(n * n);
  Eigen::Map<RowMajorMatrix>(out.eigenvectors.data(), static_cast<Eigen::Index>(n),
                             static_cast<Eigen::Index>(n)) = solver.eigenvectors();
  return out;
}

std::vector<double> hermitian_eigenvalues(const std::complex<double>* a, std::size_t n) {
  Eigen::Map<const RowMajorMatrix> m(a, static_cast<Eigen::Index>(n),
                                     static_cast<Eigen::Index>(n));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw_eigensolve_failure(a, n);
  return {solver.eigenvalues().data(), solver.eigenvalues().data() + n};
}

}  // namespace annealcert
