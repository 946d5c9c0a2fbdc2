#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "annealcert/eigensolve.hpp"
#include "annealcert/errors.hpp"
#include "annealcert/kernels.hpp"
#include "annealcert/operators.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace annealcert;
using testsupport::random_hermitian;
using testsupport::random_state;

namespace {

void check_matrix(const HermitianOperator& a, const std::vector<cx>& expect, double tol = 1e-15) {
  REQUIRE(a.elements().size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(std::abs(a.elements()[i] - expect[i]) <= tol);
}

}  // namespace

TEST_CASE("quantum states: construction, factories, validation") {
  const QuantumState b = QuantumState::basis_state(2, 3);
  CHECK(b.dim() == 4);
  CHECK(b.n_qubits() == 2);
  CHECK(b.amplitudes()[3] == cx(1.0, 0.0));
  CHECK(b.amplitudes()[0] == cx(0.0, 0.0));
  CHECK(b.norm() == doctest::Approx(1.0).epsilon(1e-15));

  const QuantumState u = QuantumState::uniform_superposition(2);
  for (const cx& a : u.amplitudes()) CHECK(std::abs(a - cx(0.5, 0.0)) < 1e-15);

  CHECK_THROWS_AS(QuantumState({cx(1, 0), cx(0, 0), cx(0, 0)}), StateError);  // length 3
  CHECK_THROWS_AS(QuantumState({cx(0.9, 0), cx(0, 0)}), StateError);          // norm 0.9
  const double bad = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(QuantumState({cx(bad, 0), cx(0, 0)}), StateError);
  CHECK_THROWS_AS(QuantumState::basis_state(1, 2), DimensionError);

  // An explicit looser tolerance admits slightly drifted norms.
  CHECK_NOTHROW(QuantumState({cx(1.0 + 1e-10, 0.0), cx(0, 0)}, 1e-9));
}

TEST_CASE("hermitian operators: construction and validation") {
  const HermitianOperator h(2, {cx(1, 0), cx(0, 1), cx(0, -1), cx(-2, 0)});
  CHECK(h(0, 1) == cx(0, 1));
  CHECK(h(1, 0) == cx(0, -1));

  CHECK_THROWS_AS(HermitianOperator(2, {cx(0, 0), cx(1, 0), cx(2, 0), cx(0, 0)}),
                  HermiticityError);
  CHECK_THROWS_AS(HermitianOperator(2, {cx(0, 1), cx(0, 0), cx(0, 0), cx(0, 0)}),
                  HermiticityError);  // complex diagonal
  CHECK_THROWS_AS(HermitianOperator(2, std::vector<cx>(3)), DimensionError);

  const HermitianOperator z = HermitianOperator::zero(4);
  for (const cx& e : z.elements()) CHECK(e == cx(0, 0));
}

TEST_CASE("pauli words assemble the expected dense matrices") {
  check_matrix(pauli_string({1.0, "X"}, 1), {cx(0, 0), cx(1, 0), cx(1, 0), cx(0, 0)});
  check_matrix(pauli_string({1.0, "Y"}, 1), {cx(0, 0), cx(0, -1), cx(0, 1), cx(0, 0)});
  check_matrix(pauli_string({1.0, "Z"}, 1), {cx(1, 0), cx(0, 0), cx(0, 0), cx(-1, 0)});

  // 0.5 ZI = 0.5 diag(1, 1, -1, -1): leftmost letter acts on the high bit.
  const HermitianOperator zi = pauli_string({0.5, "ZI"}, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(zi(i, j) == (i == j ? cx(i < 2 ? 0.5 : -0.5, 0.0) : cx(0, 0)));

  // 2 XX is 2 on the anti-diagonal.
  const HermitianOperator xx = pauli_string({2.0, "XX"}, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(xx(i, j) == (j == 3 - i ? cx(2, 0) : cx(0, 0)));

  // ZZ = diag(1, -1, -1, 1); YY has real anti-diagonal (-1, 1, 1, -1).
  const HermitianOperator zz = pauli_string({1.0, "ZZ"}, 2);
  CHECK(zz(0, 0) == cx(1, 0));
  CHECK(zz(1, 1) == cx(-1, 0));
  CHECK(zz(2, 2) == cx(-1, 0));
  CHECK(zz(3, 3) == cx(1, 0));
  const HermitianOperator yy = pauli_string({1.0, "YY"}, 2);
  CHECK(yy(0, 3) == cx(-1, 0));
  CHECK(yy(1, 2) == cx(1, 0));

  CHECK_THROWS_AS(pauli_string({1.0, "XX"}, 1), DimensionError);
  CHECK_THROWS_AS(pauli_string({1.0, "Q"}, 1), std::invalid_argument);
  CHECK_THROWS_AS(pauli_string({1.0, std::string(13, 'I')}, 13), DimensionError);
}

TEST_CASE("sums of pauli terms") {
  const std::vector<PauliTerm> terms = {{1.0, "X"}, {1.0, "Z"}};
  check_matrix(from_pauli_terms(terms, 1), {cx(1, 0), cx(1, 0), cx(1, 0), cx(-1, 0)});
  check_matrix(from_pauli_terms({}, 1), {cx(0, 0), cx(0, 0), cx(0, 0), cx(0, 0)});
}

TEST_CASE("spectral norm: worked values and properties") {
  CHECK(spectral_norm(pauli_string({1.0, "X"}, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spectral_norm(HermitianOperator::zero(4)) == doctest::Approx(0.0));

  // diag(3, -5) = -I + 4Z has norm 5 (largest magnitude, not largest value).
  const std::vector<PauliTerm> terms = {{-1.0, "I"}, {4.0, "Z"}};
  CHECK(spectral_norm(from_pauli_terms(terms, 1)) == doctest::Approx(5.0).epsilon(1e-12));

  // |c W| = |c| for any Pauli word W.
  CHECK(spectral_norm(pauli_string({-2.5, "XZ"}, 2)) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(spectral_norm(pauli_string({0.3, "YIZ"}, 3)) == doctest::Approx(0.3).epsilon(1e-12));

  std::mt19937_64 gen(101);
  for (std::size_t dim : {2u, 4u, 8u}) {
    const HermitianOperator a = random_hermitian(dim, gen);
    const HermitianOperator b = random_hermitian(dim, gen);
    std::vector<cx> neg = a.elements();
    for (cx& e : neg) e = -e;
    const HermitianOperator minus_a(dim, std::move(neg));
    CHECK(spectral_norm(minus_a) == doctest::Approx(spectral_norm(a)).epsilon(1e-12));

    std::vector<cx> sum(dim * dim);
    kernels::scaled_sum(sum.data(), 1.0, a.data(), 1.0, b.data(), dim * dim);
    const double lhs = spectral_norm(HermitianOperator(dim, std::move(sum)));
    CHECK(lhs <= spectral_norm(a) + spectral_norm(b) + 1e-10);
  }
}

TEST_CASE("distance and overlap: worked values") {
  const QuantumState z0 = QuantumState::basis_state(1, 0);
  const QuantumState z1 = QuantumState::basis_state(1, 1);
  CHECK(distance(z0, z0) == doctest::Approx(0.0));
  CHECK(distance(z0, z1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  const QuantumState minus_z0({cx(-1, 0), cx(0, 0)});
  CHECK(distance(z0, minus_z0) == doctest::Approx(2.0).epsilon(1e-15));

  CHECK(std::abs(overlap(z0, z0) - cx(1, 0)) < 1e-15);
  CHECK(std::abs(overlap(z0, z1)) < 1e-15);
  const QuantumState u2 = QuantumState::uniform_superposition(2);
  CHECK(std::abs(overlap(QuantumState::basis_state(2, 0), u2) - cx(0.5, 0)) < 1e-15);

  // Conjugate-linear in the first slot: phasing the bra conjugates out.
  const cx phase = std::exp(cx(0, 0.7));
  const QuantumState phased({phase, cx(0, 0)});
  CHECK(std::abs(overlap(phased, z0) - std::conj(phase)) < 1e-15);
  CHECK(std::abs(overlap(z0, phased) - phase) < 1e-15);

  CHECK_THROWS_AS(distance(z0, QuantumState::basis_state(2, 0)), DimensionError);
  CHECK_THROWS_AS(overlap(z0, QuantumState::basis_state(2, 0)), DimensionError);
}

TEST_CASE("distance^2 + 2 Re overlap = 2 for normalized states") {
  std::mt19937_64 gen(103);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 1 + static_cast<std::size_t>(rep % 4);
    const QuantumState a = random_state(n, gen);
    const QuantumState b = random_state(n, gen);
    const double d = distance(a, b);
    CHECK(std::abs(d * d + 2.0 * overlap(a, b).real() - 2.0) < 1e-10);
    CHECK(d >= 0.0);
    CHECK(d <= 2.0 + 1e-12);
    CHECK(std::abs(overlap(a, b) - std::conj(overlap(b, a))) < 1e-14);
  }
}

TEST_CASE("distance and |overlap| are unitarily invariant") {
  std::mt19937_64 gen(107);
  for (std::size_t n : {1u, 2u, 3u}) {
    const std::size_t dim = std::size_t{1} << n;
    const QuantumState a = random_state(n, gen);
    const QuantumState b = random_state(n, gen);
    // The eigenvector matrix of a random Hermitian is unitary; apply its
    // adjoint action through the kernel used by the propagator itself.
    const HermitianOperator h = random_hermitian(dim, gen);
    const EigenDecomposition ed = hermitian_eigendecomposition(h.data(), dim);
    std::vector<cx> ua(dim), ub(dim);
    kernels::matvec(ed.eigenvectors.data(), dim, a.data(), ua.data());
    kernels::matvec(ed.eigenvectors.data(), dim, b.data(), ub.data());
    const QuantumState qa(std::move(ua));
    const QuantumState qb(std::move(ub));
    CHECK(distance(qa, qb) == doctest::Approx(distance(a, b)).epsilon(1e-10));
    CHECK(std::abs(overlap(qa, qb)) ==
          doctest::Approx(std::abs(overlap(a, b))).epsilon(1e-10));
  }
}
