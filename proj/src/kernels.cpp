#include "annealcert/kernels.hpp"

#include <bit>
#include <cmath>

namespace annealcert::kernels {

namespace serial {

void matvec(const cx* a, std::size_t n, const cx* x, cx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const cx* row = a + i * n;
    cx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_adjoint(const cx* a, std::size_t n, const cx* x, cx* y) {
  for (std::size_t k = 0; k < n; ++k) {
    cx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i * n + k]) * x[i];
    y[k] = acc;
  }
}

cx dot(const cx* a, const cx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cx t = std::conj(a[i]) * b[i];
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

double norm_sq(const cx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
  return acc;
}

double diff_norm_sq(const cx* a, const cx* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i] - b[i]);
  return acc;
}

void scaled_sum(cx* out, double alpha, const cx* a, double beta, const cx* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = alpha * a[i] + beta * b[i];
}

void accumulate_scaled(cx* out, double alpha, const cx* a, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] += alpha * a[i];
}

void phase_rotate(cx* c, const double* w, double theta, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double ang = -theta * w[k];
    c[k] *= cx(std::cos(ang), std::sin(ang));
  }
}

void probabilities(const cx* a, double* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) p[i] = std::norm(a[i]);
}

void pauli_accumulate(cx* a, std::size_t dim, cx scaled_coeff, std::uint64_t flip_mask,
                      std::uint64_t sign_mask) {
  for (std::size_t r = 0; r < dim; ++r) {
    const bool neg = std::popcount(r & sign_mask) & 1u;
    a[r * dim + (r ^ flip_mask)] += neg ? -scaled_coeff : scaled_coeff;
  }
}

}  // namespace serial

namespace omp {

void matvec(const cx* a, std::size_t n, const cx* x, cx* y) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const cx* row = a + static_cast<std::size_t>(i) * n;
    cx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_adjoint(const cx* a, std::size_t n, const cx* x, cx* y) {
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    cx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i * n + static_cast<std::size_t>(k)]) * x[i];
    y[k] = acc;
  }
}

cx dot(const cx* a, const cx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const cx t = std::conj(a[i]) * b[i];
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

double norm_sq(const cx* a, std::size_t n) {
  double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) acc += std::norm(a[i]);
  return acc;
}

double diff_norm_sq(const cx* a, const cx* b, std::size_t n) {
  double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) acc += std::norm(a[i] - b[i]);
  return acc;
}

void scaled_sum(cx* out, double alpha, const cx* a, double beta, const cx* b, std::size_t len) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(len); ++i)
    out[i] = alpha * a[i] + beta * b[i];
}

void accumulate_scaled(cx* out, double alpha, const cx* a, std::size_t len) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(len); ++i) out[i] += alpha * a[i];
}

void phase_rotate(cx* c, const double* w, double theta, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    const double ang = -theta * w[k];
    c[k] *= cx(std::cos(ang), std::sin(ang));
  }
}

void probabilities(const cx* a, double* p, std::size_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) p[i] = std::norm(a[i]);
}

void pauli_accumulate(cx* a, std::size_t dim, cx scaled_coeff, std::uint64_t flip_mask,
                      std::uint64_t sign_mask) {
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(dim); ++r) {
    const auto ur = static_cast<std::uint64_t>(r);
    const bool neg = std::popcount(ur & sign_mask) & 1u;
    a[ur * dim + (ur ^ flip_mask)] += neg ? -scaled_coeff : scaled_coeff;
  }
}

}  // namespace omp

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

inline bool go_parallel(std::size_t work) {
#ifdef _OPENMP
  return work >= kParallelCutoff;
#else
  (void)work;
  return false;
#endif
}

}  // namespace

void matvec(const cx* a, std::size_t n, const cx* x, cx* y) {
  go_parallel(n * n) ? omp::matvec(a, n, x, y) : serial::matvec(a, n, x, y);
}

void matvec_adjoint(const cx* a, std::size_t n, const cx* x, cx* y) {
  go_parallel(n * n) ? omp::matvec_adjoint(a, n, x, y) : serial::matvec_adjoint(a, n, x, y);
}

cx dot(const cx* a, const cx* b, std::size_t n) {
  return go_parallel(n) ? omp::dot(a, b, n) : serial::dot(a, b, n);
}

double norm_sq(const cx* a, std::size_t n) {
  return go_parallel(n) ? omp::norm_sq(a, n) : serial::norm_sq(a, n);
}

double diff_norm_sq(const cx* a, const cx* b, std::size_t n) {
  return go_parallel(n) ? omp::diff_norm_sq(a, b, n) : serial::diff_norm_sq(a, b, n);
}

void scaled_sum(cx* out, double alpha, const cx* a, double beta, const cx* b, std::size_t len) {
  go_parallel(len) ? omp::scaled_sum(out, alpha, a, beta, b, len)
                   : serial::scaled_sum(out, alpha, a, beta, b, len);
}

void accumulate_scaled(cx* out, double alpha, const cx* a, std::size_t len) {
  go_parallel(len) ? omp::accumulate_scaled(out, alpha, a, len)
                   : serial::accumulate_scaled(out, alpha, a, len);
}

void phase_rotate(cx* c, const double* w, double theta, std::size_t n) {
  go_parallel(n) ? omp::phase_rotate(c, w, theta, n) : serial::phase_rotate(c, w, theta, n);
}

void probabilities(const cx* a, double* p, std::size_t n) {
  go_parallel(n) ? omp::probabilities(a, p, n) : serial::probabilities(a, p, n);
}

void pauli_accumulate(cx* a, std::size_t dim, cx scaled_coeff, std::uint64_t flip_mask,
                      std::uint64_t sign_mask) {
  go_parallel(dim) ? omp::pauli_accumulate(a, dim, scaled_coeff, flip_mask, sign_mask)
                   : serial::pauli_accumulate(a, dim, scaled_coeff, flip_mask, sign_mask);
}

}  // namespace annealcert::kernels
