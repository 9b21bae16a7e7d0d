#include "wedge/configuration.hpp"

#include <cmath>
#include <stdexcept>

namespace wedge {

namespace {

bool near_pole(const PhysPoint& p, double rho) {
  return !p.is_vertex() && std::fabs(p.t() - 0.5) <= rho;
}

bool near_vertex(const PhysPoint& p, double rho) {
  return dist_to_vertex(p) <= rho;
}

}  // namespace

Configuration::Configuration(PhysPoint robot_a, PhysPoint robot_b)
    : a(robot_a), b(robot_b) {
  if (a == b) {
    throw std::invalid_argument(
        "invalid configuration: robots A and B collide (the state lies on "
        "the excluded diagonal)");
  }
}

double config_distance(const Configuration& s, const Configuration& t) {
  return std::max(gamma_distance(s.a, t.a), gamma_distance(s.b, t.b));
}

Chart to_chart(const Configuration& s) {
  if (!s.a.is_vertex() && !s.b.is_vertex() && s.a.circle() == s.b.circle()) {
    return CylinderChart{s.a.circle(), s.a.t(), wrap_unit(s.b.t() - s.a.t())};
  }
  if (s.a.is_vertex()) {
    return SquareChart{succ(s.b.circle()), s.b.circle(), 0.0, s.b.t()};
  }
  if (s.b.is_vertex()) {
    return SquareChart{s.a.circle(), succ(s.a.circle()), s.a.t(), 0.0};
  }
  return SquareChart{s.a.circle(), s.b.circle(), s.a.t(), s.b.t()};
}

Configuration from_chart(const Chart& chart) {
  if (const auto* sq = std::get_if<SquareChart>(&chart)) {
    if (sq->a_circle == sq->b_circle) {
      throw std::invalid_argument("square chart requires two distinct circles");
    }
    return Configuration(PhysPoint::on_circle(sq->a_circle, sq->x),
                         PhysPoint::on_circle(sq->b_circle, sq->y));
  }
  const auto& cy = std::get<CylinderChart>(chart);
  return Configuration(PhysPoint::on_circle(cy.circle, cy.a),
                       PhysPoint::on_circle(cy.circle, cy.a + cy.gap));
}

NetworkClass classify_network(const Configuration& s, double rho) {
  const bool a_pole = near_pole(s.a, rho);
  const bool b_pole = near_pole(s.b, rho);

  if (a_pole && b_pole && s.a.circle() != s.b.circle()) {
    return {NetworkKind::CrossCenter, s.a.circle(), s.b.circle(), 0.0};
  }
  if (a_pole && near_vertex(s.b, rho)) {
    return {NetworkKind::JunctionVertical, s.a.circle(), s.a.circle(), 0.0};
  }
  if (b_pole && near_vertex(s.a, rho)) {
    return {NetworkKind::JunctionHorizontal, s.b.circle(), s.b.circle(), 0.0};
  }
  if (a_pole && !s.b.is_vertex() && s.b.circle() != s.a.circle()) {
    return {NetworkKind::CrossVertical, s.a.circle(), s.b.circle(), s.b.t()};
  }
  if (b_pole && !s.a.is_vertex() && s.a.circle() != s.b.circle()) {
    return {NetworkKind::CrossHorizontal, s.a.circle(), s.b.circle(), s.a.t()};
  }
  if (!s.a.is_vertex() && !s.b.is_vertex() && s.a.circle() == s.b.circle()) {
    const double gap = wrap_unit(s.b.t() - s.a.t());
    if (std::fabs(gap - 0.5) <= rho) {
      return {NetworkKind::Diagonal, s.a.circle(), s.a.circle(), s.a.t()};
    }
  }
  return {NetworkKind::NotInNetwork, CircleId::c1, CircleId::c1, 0.0};
}

bool is_node(const NetworkClass& nc) {
  return nc.kind == NetworkKind::CrossCenter ||
         nc.kind == NetworkKind::JunctionVertical ||
         nc.kind == NetworkKind::JunctionHorizontal;
}

std::string to_string(const NetworkClass& nc) {
  switch (nc.kind) {
    case NetworkKind::CrossVertical:
      return "cross-vertical(" + std::to_string(to_int(nc.i)) + "," +
             std::to_string(to_int(nc.j)) + ")";
    case NetworkKind::CrossHorizontal:
      return "cross-horizontal(" + std::to_string(to_int(nc.i)) + "," +
             std::to_string(to_int(nc.j)) + ")";
    case NetworkKind::Diagonal:
      return "diagonal(" + std::to_string(to_int(nc.i)) + ")";
    case NetworkKind::CrossCenter:
      return "cross-center(" + std::to_string(to_int(nc.i)) + "," +
             std::to_string(to_int(nc.j)) + ")";
    case NetworkKind::JunctionVertical:
      return "junction-v(" + std::to_string(to_int(nc.i)) + ")";
    case NetworkKind::JunctionHorizontal:
      return "junction-h(" + std::to_string(to_int(nc.j)) + ")";
    case NetworkKind::NotInNetwork:
      return "not-in-network";
  }
  return "?";
}

}  // namespace wedge
