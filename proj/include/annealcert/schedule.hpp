#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Annealing schedule s(t) on [0, T] with s(0) = 0, s(T) = 1, monotone
// nondecreasing. Shapes are parameterized in normalized time u = t/T so a
// schedule can be rescaled to a different total time without changing form.

namespace annealcert {

class Schedule {
 public:
  enum class Kind { Linear, Polynomial, PiecewiseLinear };

  struct Knot {
    double u;  // normalized time in [0, 1]
    double s;
  };

  static Schedule linear(double total_time);
  // s(t) = (t/T)^exponent, exponent > 0
  static Schedule polynomial(double total_time, double exponent);
  // Knots must start at (0,0), end at (1,1), with strictly increasing u and
  // nondecreasing s.
  static Schedule piecewise_linear(double total_time, std::vector<Knot> knots);

  // Throws std::domain_error outside [0, T].
  double value(double t) const;
  double total_time() const { return total_time_; }
  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  const std::vector<Knot>& knots() const { return knots_; }
  std::string kind_name() const;

  // Same shape over a different total time.
  Schedule with_total_time(double new_total_time) const;

 private:
  Schedule(Kind kind, double total_time, double exponent, std::vector<Knot> knots);

  Kind kind_;
  double total_time_;
  double exponent_ = 1.0;
  std::vector<Knot> knots_;
};

}  // namespace annealcert
