#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "annealcert/kernels.hpp"

// Times the serial and OpenMP kernel lanes side by side over the matrix
// sizes the simulator actually uses (8 to 12 qubits). Run with
// OMP_NUM_THREADS set to taste; the last column is serial time / omp time.

namespace {

using annealcert::kernels::cx;

std::vector<cx> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cx> v(n);
  for (auto& z : v) z = cx(dist(rng), dist(rng));
  return v;
}

double time_seconds(const std::function<void()>& body, std::size_t reps) {
  body();  // warm-up
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r) body();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count() / static_cast<double>(reps);
}

void report(const char* name, std::size_t dim, double serial_s, double omp_s) {
  std::printf("%-18s dim=%5zu  serial %10.3f us   omp %10.3f us   speedup %5.2fx\n", name, dim,
              serial_s * 1e6, omp_s * 1e6, serial_s / omp_s);
}

}  // namespace

int main() {
  namespace k = annealcert::kernels;
  std::printf("OpenMP lane %s\n\n", k::openmp_enabled() ? "enabled" : "disabled (serial build)");

  std::mt19937_64 rng(12345);
  for (std::size_t qubits = 8; qubits <= 12; ++qubits) {
    const std::size_t dim = std::size_t{1} << qubits;
    const std::vector<cx> a = random_vector(dim * dim, rng);
    const std::vector<cx> x = random_vector(dim, rng);
    std::vector<cx> y(dim);
    const std::size_t reps = qubits <= 10 ? 50 : 10;

    const double serial_mv =
        time_seconds([&] { k::serial::matvec(a.data(), dim, x.data(), y.data()); }, reps);
    const double omp_mv =
        time_seconds([&] { k::omp::matvec(a.data(), dim, x.data(), y.data()); }, reps);
    report("matvec", dim, serial_mv, omp_mv);

    const double serial_adj =
        time_seconds([&] { k::serial::matvec_adjoint(a.data(), dim, x.data(), y.data()); }, reps);
    const double omp_adj =
        time_seconds([&] { k::omp::matvec_adjoint(a.data(), dim, x.data(), y.data()); }, reps);
    report("matvec_adjoint", dim, serial_adj, omp_adj);

    std::vector<cx> acc(dim * dim, cx(0.0, 0.0));
    const std::uint64_t flip = dim / 2 ^ 3;
    const double serial_pauli = time_seconds(
        [&] { k::serial::pauli_accumulate(acc.data(), dim, cx(0.5, 0.0), flip, 0x5); }, reps);
    const double omp_pauli = time_seconds(
        [&] { k::omp::pauli_accumulate(acc.data(), dim, cx(0.5, 0.0), flip, 0x5); }, reps);
    report("pauli_accumulate", dim, serial_pauli, omp_pauli);

    std::printf("\n");
  }
  return 0;
}
