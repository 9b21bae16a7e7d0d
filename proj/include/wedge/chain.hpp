#pragma once

#include <array>
#include <string>
#include <vector>

#include "wedge/configuration.hpp"

namespace wedge {

enum class ChainNodeKind : std::int8_t {
  Center,     // both robots at poles of distinct circles
  JunctionV,  // A at a pole, B at the vertex
  JunctionH,  // B at a pole, A at the vertex
};

/// One of the twelve distinguished network states. Center carries both
/// circle labels; junctions carry the pole robot's circle.
struct ChainNode {
  ChainNodeKind kind;
  CircleId i;  // A's pole circle (Center, JunctionV)
  CircleId j;  // B's pole circle (Center, JunctionH)

  friend bool operator==(const ChainNode& m, const ChainNode& n) {
    if (m.kind != n.kind) return false;
    switch (m.kind) {
      case ChainNodeKind::Center:
        return m.i == n.i && m.j == n.j;
      case ChainNodeKind::JunctionV:
        return m.i == n.i;
      case ChainNodeKind::JunctionH:
        return m.j == n.j;
    }
    return false;
  }
  friend bool operator!=(const ChainNode& m, const ChainNode& n) {
    return !(m == n);
  }
};

ChainNode center_node(CircleId i, CircleId j);
ChainNode junction_v(CircleId i);
ChainNode junction_h(CircleId j);

std::string to_string(const ChainNode& n);  // "c12", "v1", "h2"

/// The exact configuration realizing a node (poles at t = 1/2).
Configuration node_configuration(const ChainNode& n);

enum class ChainCircleKind : std::int8_t {
  Vertical,    // A fixed at pole i, B ranges over circle j; nodes {v_i, c_ij}
  Horizontal,  // B fixed at pole j, A ranges over circle i; nodes {c_ij, h_j}
  Connecting,  // antipodal pairs on circle i; nodes {h_i, v_i}
};

struct ChainCircle {
  ChainCircleKind kind;
  CircleId i;
  CircleId j;  // == i for Connecting
  std::array<ChainNode, 2> nodes;
};

/// The network as a graph: 12 nodes, 15 circles, each circle split by its
/// two nodes into two semicircle edges.
struct ChainGraph {
  std::vector<ChainNode> nodes;      // 12
  std::vector<ChainCircle> circles;  // 15

  std::vector<ChainCircle> circles_through(const ChainNode& n) const;
  /// Walk of the 12 border circles visiting every node once, starting at
  /// v1 toward c12.
  std::vector<ChainNode> border_ring() const;
  int edge_count() const { return 2 * static_cast<int>(circles.size()); }
  bool connected() const;
  /// Cycle rank m - n + k of the semicircle graph.
  int first_betti() const;
};

ChainGraph build_chain();

enum class LegKind : std::int8_t {
  VertexToPole,  // the robot at the vertex runs ccw to a pole
  PoleToVertex,  // the single mobile robot runs ccw from its pole to the vertex
};

/// One half-circle counterclockwise move between consecutive nodes; the
/// other robot is parked at a pole throughout.
struct ZigzagLeg {
  ChainNode from;
  ChainNode to;
  LegKind kind;
  Robot mover;
  CircleId circle;  // the mover's circle
  double t_from;    // 0 or 1/2
  double t_to;      // t_from + 1/2
};

/// The cyclic traversal order of the twelve nodes along the exterior
/// semicircles:
///   v1 c12 h2 c32 v3 c31 h1 c21 v2 c23 h3 c13 (then back to v1).
struct ZigzagCycle {
  std::array<ZigzagLeg, 12> legs;
  int index_of(const ChainNode& n) const;  // position in the node order
  const ChainNode& node_at(int index) const { return legs[index % 12].from; }
};

const ZigzagCycle& zigzag_cycle();

/// Node a network state reduces to: cross states map to their cross
/// center, diagonal states to the first junction counterclockwise, nodes
/// to themselves. NotInNetwork is a domain error.
ChainNode node_of(const NetworkClass& nc);

/// The consecutive legs from a to b ((index(b) - index(a)) mod 12 of
/// them); empty when a == b.
std::vector<ZigzagLeg> legs_between(const ChainNode& a, const ChainNode& b);

}  // namespace wedge
