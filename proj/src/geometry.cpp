#include "wedge/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace wedge {

CircleId circle_from_int(int value) {
  if (value < 1 || value > 3) {
    throw std::invalid_argument("circle index must be 1, 2, or 3, got " +
                                std::to_string(value));
  }
  return static_cast<CircleId>(value);
}

double wrap_unit(double t) {
  double w = t - std::floor(t);
  if (w >= 1.0) w -= 1.0;  // floor rounding at negative values very near 0
  return w;
}

PhysPoint PhysPoint::on_circle(CircleId circle, double t) {
  double w = wrap_unit(t);
  if (w <= kSnapTolerance || w >= 1.0 - kSnapTolerance) {
    return vertex();
  }
  PhysPoint p;
  p.circle_ = static_cast<std::int8_t>(to_int(circle));
  p.t_ = w;
  return p;
}

CircleId PhysPoint::circle() const {
  if (is_vertex()) throw std::logic_error("the vertex lies on no single circle");
  return static_cast<CircleId>(circle_);
}

double PhysPoint::t() const {
  if (is_vertex()) throw std::logic_error("the vertex carries no arc parameter");
  return t_;
}

std::string to_string(const PhysPoint& p) {
  if (p.is_vertex()) return "vertex";
  return "c" + std::to_string(to_int(p.circle())) + "@" + std::to_string(p.t());
}

double dist_to_vertex(const PhysPoint& p) {
  if (p.is_vertex()) return 0.0;
  return std::min(p.t(), 1.0 - p.t());
}

double gamma_distance(const PhysPoint& p, const PhysPoint& q) {
  if (!p.is_vertex() && !q.is_vertex() && p.circle() == q.circle()) {
    double d = std::fabs(p.t() - q.t());
    return std::min(d, 1.0 - d);
  }
  return dist_to_vertex(p) + dist_to_vertex(q);
}

PhysPoint move_on_circle(const PhysPoint& p, CircleId circle, double signed_dist) {
  if (!p.on(circle)) {
    throw std::invalid_argument("move_on_circle: point lies on circle " +
                                std::to_string(to_int(p.circle())) +
                                ", not on circle " +
                                std::to_string(to_int(circle)));
  }
  return PhysPoint::on_circle(circle, p.t_or_zero() + signed_dist);
}

PhysPoint antipode_on(CircleId circle, const PhysPoint& p) {
  return move_on_circle(p, circle, 0.5);
}

}  // namespace wedge
