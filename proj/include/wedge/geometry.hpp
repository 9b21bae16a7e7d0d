#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace wedge {

// The track is a wedge of three unit-circumference circles glued at a single
// vertex. Arc parameter t runs counterclockwise in [0,1); the vertex sits at
// t = 0 (== 1) on every circle and the pole of a circle is at t = 1/2.

enum class CircleId : std::int8_t { c1 = 1, c2 = 2, c3 = 3 };

enum class Robot : std::int8_t { A, B };

/// Positions within this distance of the vertex are snapped to the exact
/// vertex representation at construction.
inline constexpr double kSnapTolerance = 1e-9;

constexpr std::array<CircleId, 3> all_circles() {
  return {CircleId::c1, CircleId::c2, CircleId::c3};
}

constexpr int to_int(CircleId c) { return static_cast<int>(c); }

/// Cyclic successor: 1 -> 2 -> 3 -> 1.
constexpr CircleId succ(CircleId c) {
  return static_cast<CircleId>(to_int(c) % 3 + 1);
}

CircleId circle_from_int(int value);  // validates 1..3

/// Wraps t into [0, 1).
double wrap_unit(double t);

/// A point of the track: the shared vertex, or an interior point of one
/// circle. The vertex is representable only by the dedicated variant, so
/// membership tests are exact.
class PhysPoint {
 public:
  PhysPoint() = default;

  static PhysPoint vertex() { return PhysPoint{}; }

  /// Normalizes t mod 1 and snaps to the vertex within kSnapTolerance.
  static PhysPoint on_circle(CircleId circle, double t);

  bool is_vertex() const { return circle_ == 0; }
  CircleId circle() const;  // requires !is_vertex()
  double t() const;         // requires !is_vertex()

  /// Arc parameter with the vertex reading as 0.
  double t_or_zero() const { return circle_ == 0 ? 0.0 : t_; }

  bool on(CircleId c) const { return is_vertex() || circle_ == to_int(c); }

  friend bool operator==(const PhysPoint& p, const PhysPoint& q) {
    return p.circle_ == q.circle_ && (p.circle_ == 0 || p.t_ == q.t_);
  }
  friend bool operator!=(const PhysPoint& p, const PhysPoint& q) {
    return !(p == q);
  }

 private:
  std::int8_t circle_ = 0;  // 0 = vertex
  double t_ = 0.0;
};

std::string to_string(const PhysPoint& p);

/// Distance from p to the vertex: min(t, 1-t), zero for the vertex itself.
double dist_to_vertex(const PhysPoint& p);

/// Path metric on the track. Same circle: shorter of the two arcs.
/// Different circles: through the vertex.
double gamma_distance(const PhysPoint& p, const PhysPoint& q);

/// Advances p along `circle` by a signed arc distance (positive =
/// counterclockwise). p must lie on `circle`; the vertex may enter any
/// circle. Wraps mod 1 and renormalizes.
PhysPoint move_on_circle(const PhysPoint& p, CircleId circle, double signed_dist);

/// The point antipodal to p on `circle` (arc parameter t + 1/2 mod 1).
PhysPoint antipode_on(CircleId circle, const PhysPoint& p);

}  // namespace wedge
