#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "annealcert/operators.hpp"

// Deterministic control-error term V(t) added to the intended Hamiltonian.
// Every supported family separates as V(t) = envelope(t) * shape with a
// fixed Hermitian shape, which keeps |V(t)| = |envelope(t)| * |shape| and
// makes the error budget cheap for simple envelopes.

namespace annealcert {

// Scalar envelope in normalized time u = t/T, piecewise continuous.
// piecewise_linear knots may repeat a u value to express a jump
// (right-continuous at the jump).
class Envelope {
 public:
  enum class Kind { Constant, Linear, SinPi, PiecewiseLinear };

  struct Knot {
    double u;
    double value;
  };

  static Envelope constant(double value);
  // Interpolates start (u=0) to end (u=1).
  static Envelope linear(double start, double end);
  // amplitude * sin(pi u)
  static Envelope sin_pi(double amplitude);
  static Envelope piecewise_linear(std::vector<Knot> knots);

  double value(double t, double total_time) const;
  // max |value| over [0, 1]
  double sup_abs() const;
  // Envelopes with a closed-form integral of |value|; constant and linear
  // qualify (linear handles a sign change by splitting at the root).
  bool has_analytic_abs_integral() const;
  // integral over [0, T] of |value(t)| dt, analytic kinds only
  double abs_integral(double total_time) const;
  Envelope scaled(double factor) const;
  // Normalized times where the envelope jumps (duplicate piecewise knots).
  std::vector<double> discontinuities() const;

  Kind kind() const { return kind_; }
  double start() const { return a_; }
  double end() const { return b_; }
  double amplitude() const { return a_; }
  const std::vector<Knot>& knots() const { return knots_; }
  std::string kind_name() const;

 private:
  Envelope(Kind kind, double a, double b, std::vector<Knot> knots);

  Kind kind_;
  double a_ = 0.0;  // constant value / linear start / sine amplitude
  double b_ = 0.0;  // linear end
  std::vector<Knot> knots_;
};

enum class PauliAxis { X, Y, Z };

struct CouplingDelta {
  std::size_t i = 0;
  std::size_t j = 0;
  double delta = 0.0;
};

class ErrorModel {
 public:
  enum class Kind {
    None,
    StaticFieldBias,
    CouplingDeviation,
    SchedulePerturbation,
    CustomTerm,
  };

  static ErrorModel none(std::size_t n_qubits);
  // sum_i strengths[i] * sigma_axis on qubit i, time-independent
  static ErrorModel static_field_bias(PauliAxis axis, std::vector<double> strengths);
  // sum over deltas of delta * Z_i Z_j, time-independent
  static ErrorModel coupling_deviation(std::vector<CouplingDelta> deltas, std::size_t n_qubits);
  // delta(t) * problem term
  static ErrorModel schedule_perturbation(Envelope delta, HermitianOperator problem);
  // g(t) * sum of Pauli terms
  static ErrorModel custom(std::vector<PauliTerm> terms, Envelope g, std::size_t n_qubits);

  // V(t) = envelope(t) * shape; the result is Hermitian by construction
  // (real envelope, Hermitian shape) and re-verified by the operator type.
  HermitianOperator at(double t, double total_time) const;

  const HermitianOperator& shape() const { return shape_; }
  const Envelope& envelope() const { return envelope_; }
  std::size_t dim() const { return shape_.dim(); }
  Kind kind() const { return kind_; }
  std::string kind_name() const;

  // Same family with all strengths multiplied by factor.
  ErrorModel scaled(double factor) const;

 private:
  ErrorModel(Kind kind, HermitianOperator shape, Envelope envelope);

  Kind kind_;
  HermitianOperator shape_;
  Envelope envelope_;
};

}  // namespace annealcert
