#include "annealcert/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace annealcert {

Schedule::Schedule(Kind kind, double total_time, double exponent, std::vector<Knot> knots)
    : kind_(kind), total_time_(total_time), exponent_(exponent), knots_(std::move(knots)) {
  if (!(total_time_ > 0.0) || !std::isfinite(total_time_))
    throw std::invalid_argument("schedule total time must be positive and finite");
}

Schedule Schedule::linear(double total_time) { return Schedule(Kind::Linear, total_time, 1.0, {}); }

Schedule Schedule::polynomial(double total_time, double exponent) {
  if (!(exponent > 0.0) || !std::isfinite(exponent))
    throw std::invalid_argument("polynomial schedule exponent must be positive");
  return Schedule(Kind::Polynomial, total_time, exponent, {});
}

Schedule Schedule::piecewise_linear(double total_time, std::vector<Knot> knots) {
  if (knots.size() < 2) throw std::invalid_argument("piecewise schedule needs at least two knots");
  if (knots.front().u != 0.0 || knots.front().s != 0.0)
    throw std::invalid_argument("piecewise schedule must start at (0, 0)");
  if (knots.back().u != 1.0 || knots.back().s != 1.0)
    throw std::invalid_argument("piecewise schedule must end at (1, 1)");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].u > knots[i - 1].u))
      throw std::invalid_argument("piecewise schedule knots must have strictly increasing u");
    if (knots[i].s < knots[i - 1].s)
      throw std::invalid_argument("piecewise schedule must be nondecreasing");
  }
  return Schedule(Kind::PiecewiseLinear, total_time, 1.0, std::move(knots));
}

double Schedule::value(double t) const {
  if (t < 0.0 || t > total_time_)
    throw std::domain_error("schedule evaluated at t=" + std::to_string(t) + " outside [0, " +
                            std::to_string(total_time_) + "]");
  const double u = t / total_time_;
  switch (kind_) {
    case Kind::Linear:
      return u;
    case Kind::Polynomial:
      return std::pow(u, exponent_);
    case Kind::PiecewiseLinear: {
      std::size_t hi = 1;
      while (hi + 1 < knots_.size() && knots_[hi].u < u) ++hi;
      const Knot& a = knots_[hi - 1];
      const Knot& b = knots_[hi];
      const double w = (u - a.u) / (b.u - a.u);
      return a.s + w * (b.s - a.s);
    }
  }
  return u;
}

std::string Schedule::kind_name() const {
  switch (kind_) {
    case Kind::Linear:
      return "linear";
    case Kind::Polynomial:
      return "polynomial";
    case Kind::PiecewiseLinear:
      return "piecewise_linear";
  }
  return "linear";
}

Schedule Schedule::with_total_time(double new_total_time) const {
  return Schedule(kind_, new_total_time, exponent_, knots_);
}

}  // namespace annealcert
