#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

// Dense complex kernels behind the simulator's inner loops.
//
// Every kernel exists twice: kernels::serial holds the reference
// implementation, kernels::omp the OpenMP-parallel one. The unqualified
// entry points dispatch on problem size, falling back to serial below
// kParallelCutoff elements (and always when built without OpenMP).
// tests/test_kernels.cpp checks the two lanes against each other;
// bench/bench_kernels.cpp times them side by side.
//
// Matrices are dense, row-major, square. All loops use schedule(static)
// so results are reproducible for a fixed thread count.

namespace annealcert::kernels {

using cx = std::complex<double>;

// Work sizes below this run serially even when OpenMP is available.
inline constexpr std::size_t kParallelCutoff = 1u << 15;

namespace serial {

// y = A x
void matvec(const cx* a, std::size_t n, const cx* x, cx* y);
// y = A^dagger x
void matvec_adjoint(const cx* a, std::size_t n, const cx* x, cx* y);
// sum_i conj(a_i) b_i
cx dot(const cx* a, const cx* b, std::size_t n);
double norm_sq(const cx* a, std::size_t n);
double diff_norm_sq(const cx* a, const cx* b, std::size_t n);
// out = alpha a + beta b, elementwise over len entries
void scaled_sum(cx* out, double alpha, const cx* a, double beta, const cx* b, std::size_t len);
// out += alpha a
void accumulate_scaled(cx* out, double alpha, const cx* a, std::size_t len);
// c_k *= exp(-i theta w_k)
void phase_rotate(cx* c, const double* w, double theta, std::size_t n);
// p_i = |a_i|^2
void probabilities(const cx* a, double* p, std::size_t n);
// Adds a Pauli-word matrix into a (dim x dim): row r gains scaled_coeff *
// (-1)^popcount(r & sign_mask) at column r ^ flip_mask. scaled_coeff folds
// the term coefficient together with the (-i)^#Y phase so the result is
// Hermitian for real term coefficients.
void pauli_accumulate(cx* a, std::size_t dim, cx scaled_coeff, std::uint64_t flip_mask,
                      std::uint64_t sign_mask);

}  // namespace serial

namespace omp {

void matvec(const cx* a, std::size_t n, const cx* x, cx* y);
void matvec_adjoint(const cx* a, std::size_t n, const cx* x, cx* y);
cx dot(const cx* a, const cx* b, std::size_t n);
double norm_sq(const cx* a, std::size_t n);
double diff_norm_sq(const cx* a, const cx* b, std::size_t n);
void scaled_sum(cx* out, double alpha, const cx* a, double beta, const cx* b, std::size_t len);
void accumulate_scaled(cx* out, double alpha, const cx* a, std::size_t len);
void phase_rotate(cx* c, const double* w, double theta, std::size_t n);
void probabilities(const cx* a, double* p, std::size_t n);
void pauli_accumulate(cx* a, std::size_t dim, cx scaled_coeff, std::uint64_t flip_mask,
                      std::uint64_t sign_mask);

}  // namespace omp

// Size-dispatched entry points used by the rest of the library.
void matvec(const cx* a, std::size_t n, const cx* x, cx* y);
void matvec_adjoint(const cx* a, std::size_t n, const cx* x, cx* y);
cx dot(const cx* a, const cx* b, std::size_t n);
double norm_sq(const cx* a, std::size_t n);
double diff_norm_sq(const cx* a, const cx* b, std::size_t n);
void scaled_sum(cx* out, double alpha, const cx* a, double beta, const cx* b, std::size_t len);
void accumulate_scaled(cx* out, double alpha, const cx* a, std::size_t len);
void phase_rotate(cx* c, const double* w, double theta, std::size_t n);
void probabilities(const cx* a, double* p, std::size_t n);
void pauli_accumulate(cx* a, std::size_t dim, cx scaled_coeff, std::uint64_t flip_mask,
                      std::uint64_t sign_mask);

// True when the library was compiled with OpenMP.
bool openmp_enabled();

}  // namespace annealcert::kernels
