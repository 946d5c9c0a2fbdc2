#include "annealcert/error_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "annealcert/errors.hpp"

namespace annealcert {

Envelope::Envelope(Kind kind, double a, double b, std::vector<Knot> knots)
    : kind_(kind), a_(a), b_(b), knots_(std::move(knots)) {}

Envelope Envelope::constant(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("envelope value must be finite");
  return Envelope(Kind::Constant, value, value, {});
}

Envelope Envelope::linear(double start, double end) {
  if (!std::isfinite(start) || !std::isfinite(end))
    throw std::invalid_argument("envelope endpoints must be finite");
  return Envelope(Kind::Linear, start, end, {});
}

Envelope Envelope::sin_pi(double amplitude) {
  if (!std::isfinite(amplitude)) throw std::invalid_argument("envelope amplitude must be finite");
  return Envelope(Kind::SinPi, amplitude, 0.0, {});
}

Envelope Envelope::piecewise_linear(std::vector<Knot> knots) {
  if (knots.size() < 2) throw std::invalid_argument("piecewise envelope needs at least two knots");
  if (knots.front().u != 0.0 || knots.back().u != 1.0)
    throw std::invalid_argument("piecewise envelope knots must span u in [0, 1]");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].value) || !std::isfinite(knots[i].u))
      throw std::invalid_argument("piecewise envelope knots must be finite");
    if (i > 0 && knots[i].u < knots[i - 1].u)
      throw std::invalid_argument("piecewise envelope knots must have nondecreasing u");
    if (i > 1 && knots[i].u == knots[i - 1].u && knots[i - 1].u == knots[i - 2].u)
      throw std::invalid_argument("piecewise envelope allows at most two knots per u");
  }
  return Envelope(Kind::PiecewiseLinear, 0.0, 0.0, std::move(knots));
}

double Envelope::value(double t, double total_time) const {
  if (!(total_time > 0.0)) throw std::domain_error("envelope needs a positive total time");
  if (t < 0.0 || t > total_time)
    throw std::domain_error("envelope evaluated at t=" + std::to_string(t) + " outside [0, " +
                            std::to_string(total_time) + "]");
  const double u = t / total_time;
  switch (kind_) {
    case Kind::Constant:
      return a_;
    case Kind::Linear:
      return a_ + u * (b_ - a_);
    case Kind::SinPi:
      return a_ * std::sin(u * 3.14159265358979323846);
    case Kind::PiecewiseLinear: {
      // Advance past every knot with knot.u <= u so that at a duplicated u
      // (a jump) the segment starting there wins: right-continuous.
      std::size_t hi = 1;
      while (hi + 1 < knots_.size() && knots_[hi].u <= u) ++hi;
      const Knot& a = knots_[hi - 1];
      const Knot& b = knots_[hi];
      if (b.u == a.u) return b.value;  // right-continuous at a jump
      const double w = (u - a.u) / (b.u - a.u);
      return a.value + w * (b.value - a.value);
    }
  }
  return a_;
}

double Envelope::sup_abs() const {
  switch (kind_) {
    case Kind::Constant:
      return std::abs(a_);
    case Kind::Linear:
      return std::max(std::abs(a_), std::abs(b_));
    case Kind::SinPi:
      return std::abs(a_);
    case Kind::PiecewiseLinear: {
      double worst = 0.0;
      for (const Knot& k : knots_) worst = std::max(worst, std::abs(k.value));
      return worst;
    }
  }
  return std::abs(a_);
}

bool Envelope::has_analytic_abs_integral() const {
  return kind_ == Kind::Constant || kind_ == Kind::Linear;
}

double Envelope::abs_integral(double total_time) const {
  switch (kind_) {
    case Kind::Constant:
      return std::abs(a_) * total_time;
    case Kind::Linear: {
      if (a_ * b_ >= 0.0) return 0.5 * (std::abs(a_) + std::abs(b_)) * total_time;
      // sign change at u0: two triangles
      const double u0 = a_ / (a_ - b_);
      return 0.5 * total_time * (std::abs(a_) * u0 + std::abs(b_) * (1.0 - u0));
    }
    default:
      throw std::logic_error("abs_integral requested for a non-analytic envelope kind");
  }
}

Envelope Envelope::scaled(double factor) const {
  switch (kind_) {
    case Kind::Constant:
      return constant(a_ * factor);
    case Kind::Linear:
      return linear(a_ * factor, b_ * factor);
    case Kind::SinPi:
      return sin_pi(a_ * factor);
    case Kind::PiecewiseLinear: {
      std::vector<Knot> ks = knots_;
      for (Knot& k : ks) k.value *= factor;
      return piecewise_linear(std::move(ks));
    }
  }
  return *this;
}

std::vector<double> Envelope::discontinuities() const {
  std::vector<double> out;
  for (std::size_t i = 1; i < knots_.size(); ++i)
    if (knots_[i].u == knots_[i - 1].u && knots_[i].value != knots_[i - 1].value)
      out.push_back(knots_[i].u);
  return out;
}

std::string Envelope::kind_name() const {
  switch (kind_) {
    case Kind::Constant:
      return "constant";
    case Kind::Linear:
      return "linear";
    case Kind::SinPi:
      return "sin_pi";
    case Kind::PiecewiseLinear:
      return "piecewise_linear";
  }
  return "constant";
}

namespace {

char axis_letter(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return 'X';
    case PauliAxis::Y:
      return 'Y';
    case PauliAxis::Z:
      return 'Z';
  }
  return 'Z';
}

}  // namespace

ErrorModel::ErrorModel(Kind kind, HermitianOperator shape, Envelope envelope)
    : kind_(kind), shape_(std::move(shape)), envelope_(std::move(envelope)) {}

ErrorModel ErrorModel::none(std::size_t n_qubits) {
  return ErrorModel(Kind::None, HermitianOperator::zero(std::size_t{1} << n_qubits),
                    Envelope::constant(0.0));
}

ErrorModel ErrorModel::static_field_bias(PauliAxis axis, std::vector<double> strengths) {
  const std::size_t n = strengths.size();
  if (n == 0) throw DimensionError("static_field_bias needs at least one qubit");
  std::vector<PauliTerm> terms;
  for (std::size_t q = 0; q < n; ++q) {
    if (strengths[q] == 0.0) continue;
    std::string word(n, 'I');
    word[q] = axis_letter(axis);
    terms.push_back({strengths[q], std::move(word)});
  }
  return ErrorModel(Kind::StaticFieldBias, from_pauli_terms(terms, n), Envelope::constant(1.0));
}

ErrorModel ErrorModel::coupling_deviation(std::vector<CouplingDelta> deltas, std::size_t n_qubits) {
  if (n_qubits < 2) throw DimensionError("coupling_deviation needs at least two qubits");
  std::vector<PauliTerm> terms;
  for (const CouplingDelta& d : deltas) {
    if (d.i >= n_qubits || d.j >= n_qubits)
      throw DimensionError("coupling qubit index out of range");
    if (d.i == d.j) throw DimensionError("coupling must join two distinct qubits");
    std::string word(n_qubits, 'I');
    word[d.i] = 'Z';
    word[d.j] = 'Z';
    terms.push_back({d.delta, std::move(word)});
  }
  return ErrorModel(Kind::CouplingDeviation, from_pauli_terms(terms, n_qubits),
                    Envelope::constant(1.0));
}

ErrorModel ErrorModel::schedule_perturbation(Envelope delta, HermitianOperator problem) {
  return ErrorModel(Kind::SchedulePerturbation, std::move(problem), std::move(delta));
}

ErrorModel ErrorModel::custom(std::vector<PauliTerm> terms, Envelope g, std::size_t n_qubits) {
  return ErrorModel(Kind::CustomTerm, from_pauli_terms(terms, n_qubits), std::move(g));
}

HermitianOperator ErrorModel::at(double t, double total_time) const {
  const double g = envelope_.value(t, total_time);
  const std::size_t n = shape_.dim();
  std::vector<cx> a(n * n);
  kernels::scaled_sum(a.data(), g, shape_.data(), 0.0, shape_.data(), n * n);
  return HermitianOperator(n, std::move(a));
}

std::string ErrorModel::kind_name() const {
  switch (kind_) {
    case Kind::None:
      return "none";
    case Kind::StaticFieldBias:
      return "static_field_bias";
    case Kind::CouplingDeviation:
      return "coupling_deviation";
    case Kind::SchedulePerturbation:
      return "schedule_perturbation";
    case Kind::CustomTerm:
      return "custom_term";
  }
  return "none";
}

ErrorModel ErrorModel::scaled(double factor) const {
  return ErrorModel(kind_, shape_, envelope_.scaled(factor));
}

}  // namespace annealcert
