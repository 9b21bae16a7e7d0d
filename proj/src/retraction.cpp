#include "wedge/retraction.hpp"

#include <cmath>
#include <stdexcept>

namespace wedge {

namespace {

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

/// Signed arc displacement of magnitude <= 1/2 carrying `from` to `to`.
double short_arc(const PhysPoint& from, const PhysPoint& to) {
  const double d = wrap_unit(to.t_or_zero() - from.t_or_zero());
  return d <= 0.5 ? d : d - 1.0;
}

struct SquareTarget {
  double x;
  double y;
};

SquareTarget square_target(double x, double y) {
  const double u = x - 0.5;
  const double v = y - 0.5;
  const double mu = 0.5 - std::fabs(u);  // margin of A to the near corner
  const double mv = 0.5 - std::fabs(v);
  const double m = std::max(mu, mv);
  if (m <= 0.0) {
    throw std::invalid_argument("square rule: state at a removed corner");
  }
  const double t_star = 0.5 / m;
  const double nu = (mu >= mv) ? 0.0 : 0.5 - t_star * mu;
  const double nv = (mv >= mu) ? 0.0 : 0.5 - t_star * mv;
  return {0.5 + sign_of(u) * nu, 0.5 + sign_of(v) * nv};
}

}  // namespace

ChartMove cylinder_rule(double a, double gap) {
  const double alpha = std::min(a, 1.0 - a);
  const double b = wrap_unit(a + gap);
  const double beta = std::min(b, 1.0 - b);
  const double total = alpha + beta;
  if (total <= 0.0) {
    throw std::invalid_argument("cylinder rule: both robots at the vertex");
  }
  const double delta = 0.5 - gap;
  return {-delta * alpha / total, delta * beta / total};
}

ChartMove square_rule(double x, double y) {
  const SquareTarget target = square_target(x, y);
  return {target.x - x, target.y - y};
}

Configuration snap_to_network(const Configuration& s, const NetworkClass& nc) {
  const PhysPoint pole_i = PhysPoint::on_circle(nc.i, 0.5);
  const PhysPoint pole_j = PhysPoint::on_circle(nc.j, 0.5);
  switch (nc.kind) {
    case NetworkKind::CrossCenter:
      return Configuration(pole_i, pole_j);
    case NetworkKind::JunctionVertical:
      return Configuration(pole_i, PhysPoint::vertex());
    case NetworkKind::JunctionHorizontal:
      return Configuration(PhysPoint::vertex(), pole_j);
    case NetworkKind::CrossVertical:
      return Configuration(pole_i, s.b);
    case NetworkKind::CrossHorizontal:
      return Configuration(s.a, pole_j);
    case NetworkKind::Diagonal:
      return Configuration(s.a, antipode_on(nc.i, s.a));
    case NetworkKind::NotInNetwork:
      break;
  }
  throw std::invalid_argument("snap_to_network: state is not on the network");
}

namespace {

/// All closed-form displacements have magnitude < 1/2, so the signed short
/// arc between the (snapped) endpoints recovers them exactly.
RetractionMove finish(const Configuration& start, const Configuration& raw_end,
                      double rho) {
  const NetworkClass nc = classify_network(raw_end, rho);
  const Configuration end = nc.kind == NetworkKind::NotInNetwork
                                ? raw_end
                                : snap_to_network(raw_end, nc);
  return {start, end, short_arc(start.a, end.a), short_arc(start.b, end.b)};
}

}  // namespace

RetractionMove retract(const Configuration& s, double rho) {
  const NetworkClass nc = classify_network(s, rho);
  if (nc.kind != NetworkKind::NotInNetwork) {
    const Configuration end = snap_to_network(s, nc);
    return {s, end, short_arc(s.a, end.a), short_arc(s.b, end.b)};
  }

  const Chart chart = to_chart(s);
  if (const auto* cy = std::get_if<CylinderChart>(&chart)) {
    const ChartMove mv = cylinder_rule(cy->a, cy->gap);
    const double a_end = wrap_unit(cy->a + mv.da);
    const PhysPoint pa = PhysPoint::on_circle(cy->circle, a_end);
    // Pin the end gap to exactly 1/2.
    const PhysPoint pb = PhysPoint::on_circle(cy->circle, a_end + 0.5);
    return finish(s, Configuration(pa, pb), rho);
  }
  const auto& sq = std::get<SquareChart>(chart);
  const SquareTarget target = square_target(sq.x, sq.y);
  const PhysPoint pa = PhysPoint::on_circle(sq.a_circle, target.x);
  const PhysPoint pb = PhysPoint::on_circle(sq.b_circle, target.y);
  return finish(s, Configuration(pa, pb), rho);
}

Configuration evaluate_trace(const Configuration& s, double tau, double rho) {
  const RetractionMove move = retract(s, rho);
  if (tau <= 0.0) return s;
  if (tau >= 1.0) return move.end;
  PhysPoint pa = s.a;
  PhysPoint pb = s.b;
  if (move.a_velocity != 0.0) {
    const CircleId ca = s.a.is_vertex() ? move.end.a.circle() : s.a.circle();
    pa = move_on_circle(s.a, ca, tau * move.a_velocity);
  }
  if (move.b_velocity != 0.0) {
    const CircleId cb = s.b.is_vertex() ? move.end.b.circle() : s.b.circle();
    pb = move_on_circle(s.b, cb, tau * move.b_velocity);
  }
  return Configuration(pa, pb);
}

}  // namespace wedge
