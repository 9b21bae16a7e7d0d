#pragma once

#include <string>
#include <variant>

#include "wedge/geometry.hpp"

namespace wedge {

/// An ordered collision-free pair of robot positions. Robots are
/// distinguishable; the collision set (both at the same point, including
/// both at the vertex) is excluded at construction.
struct Configuration {
  PhysPoint a;
  PhysPoint b;

  Configuration(PhysPoint robot_a, PhysPoint robot_b);

  friend bool operator==(const Configuration& s, const Configuration& t) {
    return s.a == t.a && s.b == t.b;
  }
  friend bool operator!=(const Configuration& s, const Configuration& t) {
    return !(s == t);
  }
};

/// L-infinity metric over the two robots' track distances.
double config_distance(const Configuration& s, const Configuration& t);

/// Chart for robots on two distinct circles: A on `a_circle` at x, B on
/// `b_circle` at y. Boundary coordinate 0 stands for a robot at the vertex.
struct SquareChart {
  CircleId a_circle;
  CircleId b_circle;
  double x;
  double y;
};

/// Chart for both robots on one circle: a = A's arc parameter, gap =
/// (t_B - t_A) mod 1, never 0. The two triangles of the flat picture are
/// the gap < 1/2 and gap > 1/2 halves.
struct CylinderChart {
  CircleId circle;
  double a;
  double gap;
};

using Chart = std::variant<SquareChart, CylinderChart>;

/// Charts are labelled views, not a partition: a vertex state reads as a
/// square with boundary coordinate 0 and the free label set to the
/// successor of the partner's circle.
Chart to_chart(const Configuration& s);
Configuration from_chart(const Chart& chart);

enum class NetworkKind {
  CrossVertical,       // A at pole i, B interior of a different circle j
  CrossHorizontal,     // B at pole j, A interior of a different circle i
  Diagonal,            // both on circle i, antipodal, neither at the vertex
  CrossCenter,         // A at pole i, B at pole j, i != j
  JunctionVertical,    // A at pole i, B at the vertex
  JunctionHorizontal,  // B at pole j, A at the vertex
  NotInNetwork,
};

struct NetworkClass {
  NetworkKind kind = NetworkKind::NotInNetwork;
  CircleId i = CircleId::c1;  // A's circle where applicable
  CircleId j = CircleId::c1;  // B's circle where applicable
  double coord = 0.0;         // free coordinate of segment states
};

/// Classifies s against the network (poles and antipodal pairs) within
/// tolerance rho. Center/junction variants take precedence over the open
/// segment variants; the classification is exhaustive and exclusive.
NetworkClass classify_network(const Configuration& s, double rho = kSnapTolerance);

/// True for the twelve distinguished states: cross centers and junctions.
bool is_node(const NetworkClass& nc);

std::string to_string(const NetworkClass& nc);

}  // namespace wedge
