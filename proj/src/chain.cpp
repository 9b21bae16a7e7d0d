#include "wedge/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace wedge {

ChainNode center_node(CircleId i, CircleId j) {
  if (i == j) throw std::invalid_argument("cross center needs distinct circles");
  return {ChainNodeKind::Center, i, j};
}

ChainNode junction_v(CircleId i) { return {ChainNodeKind::JunctionV, i, i}; }

ChainNode junction_h(CircleId j) { return {ChainNodeKind::JunctionH, j, j}; }

std::string to_string(const ChainNode& n) {
  switch (n.kind) {
    case ChainNodeKind::Center:
      return "c" + std::to_string(to_int(n.i)) + std::to_string(to_int(n.j));
    case ChainNodeKind::JunctionV:
      return "v" + std::to_string(to_int(n.i));
    case ChainNodeKind::JunctionH:
      return "h" + std::to_string(to_int(n.j));
  }
  return "?";
}

Configuration node_configuration(const ChainNode& n) {
  switch (n.kind) {
    case ChainNodeKind::Center:
      return Configuration(PhysPoint::on_circle(n.i, 0.5),
                           PhysPoint::on_circle(n.j, 0.5));
    case ChainNodeKind::JunctionV:
      return Configuration(PhysPoint::on_circle(n.i, 0.5), PhysPoint::vertex());
    case ChainNodeKind::JunctionH:
      return Configuration(PhysPoint::vertex(), PhysPoint::on_circle(n.j, 0.5));
  }
  throw std::logic_error("unreachable");
}

std::vector<ChainCircle> ChainGraph::circles_through(const ChainNode& n) const {
  std::vector<ChainCircle> out;
  for (const auto& c : circles) {
    if (c.nodes[0] == n || c.nodes[1] == n) out.push_back(c);
  }
  return out;
}

std::vector<ChainNode> ChainGraph::border_ring() const {
  std::vector<ChainNode> ring;
  std::vector<bool> used(circles.size(), false);
  ChainNode at = junction_v(CircleId::c1);
  const ChainNode first_target = center_node(CircleId::c1, CircleId::c2);
  for (int step = 0; step < 12; ++step) {
    ring.push_back(at);
    bool advanced = false;
    // Prefer the step toward c12 on the first move; afterwards each node
    // has exactly one unused border circle.
    for (std::size_t pass = 0; pass < 2 && !advanced; ++pass) {
      for (std::size_t ci = 0; ci < circles.size(); ++ci) {
        const auto& c = circles[ci];
        if (used[ci] || c.kind == ChainCircleKind::Connecting) continue;
        if (c.nodes[0] != at && c.nodes[1] != at) continue;
        const ChainNode other = (c.nodes[0] == at) ? c.nodes[1] : c.nodes[0];
        if (step == 0 && pass == 0 && other != first_target) continue;
        used[ci] = true;
        at = other;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("border circles do not form a ring");
  }
  if (at != ring.front()) throw std::logic_error("border ring does not close");
  return ring;
}

bool ChainGraph::connected() const {
  std::vector<int> component(nodes.size(), -1);
  auto index_of_node = [&](const ChainNode& n) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == n) return static_cast<int>(i);
    }
    return -1;
  };
  std::vector<int> stack = {0};
  component[0] = 0;
  while (!stack.empty()) {
    const int at = stack.back();
    stack.pop_back();
    for (const auto& c : circles) {
      if (c.nodes[0] != nodes[at] && c.nodes[1] != nodes[at]) continue;
      const ChainNode other = (c.nodes[0] == nodes[at]) ? c.nodes[1] : c.nodes[0];
      const int oi = index_of_node(other);
      if (component[oi] < 0) {
        component[oi] = 0;
        stack.push_back(oi);
      }
    }
  }
  return std::all_of(component.begin(), component.end(),
                     [](int c) { return c == 0; });
}

int ChainGraph::first_betti() const {
  const int m = edge_count();
  const int n = static_cast<int>(nodes.size());
  const int k = connected() ? 1 : -1;  // inputs here are connected
  return m - n + k;
}

ChainGraph build_chain() {
  ChainGraph g;
  for (CircleId i : all_circles()) {
    g.nodes.push_back(junction_v(i));
    g.nodes.push_back(junction_h(i));
    for (CircleId j : all_circles()) {
      if (i == j) continue;
      g.nodes.push_back(center_node(i, j));
      g.circles.push_back({ChainCircleKind::Vertical, i, j,
                           {junction_v(i), center_node(i, j)}});
      g.circles.push_back({ChainCircleKind::Horizontal, i, j,
                           {center_node(i, j), junction_h(j)}});
    }
    g.circles.push_back({ChainCircleKind::Connecting, i, i,
                         {junction_h(i), junction_v(i)}});
  }
  return g;
}

namespace {

/// Successor node and leg under the traversal rules: a vertex robot enters
/// the successor of the parked robot's circle; at a center the mover is A
/// exactly when B's circle is the successor of A's. All motion is a ccw
/// half-circle.
ZigzagLeg leg_from(const ChainNode& n) {
  switch (n.kind) {
    case ChainNodeKind::JunctionV: {
      const CircleId enter = succ(n.i);
      return {n, center_node(n.i, enter), LegKind::VertexToPole,
              Robot::B, enter, 0.0, 0.5};
    }
    case ChainNodeKind::JunctionH: {
      const CircleId enter = succ(n.j);
      return {n, center_node(enter, n.j), LegKind::VertexToPole,
              Robot::A, enter, 0.0, 0.5};
    }
    case ChainNodeKind::Center: {
      if (n.j == succ(n.i)) {
        return {n, junction_h(n.j), LegKind::PoleToVertex,
                Robot::A, n.i, 0.5, 1.0};
      }
      return {n, junction_v(n.i), LegKind::PoleToVertex,
              Robot::B, n.j, 0.5, 1.0};
    }
  }
  throw std::logic_error("unreachable");
}

ZigzagCycle build_cycle() {
  ZigzagCycle cycle{};
  ChainNode at = junction_v(CircleId::c1);
  for (int k = 0; k < 12; ++k) {
    cycle.legs[k] = leg_from(at);
    at = cycle.legs[k].to;
  }
  if (at != junction_v(CircleId::c1)) {
    throw std::logic_error("zigzag traversal does not close");
  }
  return cycle;
}

}  // namespace

const ZigzagCycle& zigzag_cycle() {
  static const ZigzagCycle cycle = build_cycle();
  return cycle;
}

int ZigzagCycle::index_of(const ChainNode& n) const {
  for (int k = 0; k < 12; ++k) {
    if (legs[k].from == n) return k;
  }
  throw std::invalid_argument("node not on the zigzag cycle: " + to_string(n));
}

ChainNode node_of(const NetworkClass& nc) {
  switch (nc.kind) {
    case NetworkKind::CrossVertical:
    case NetworkKind::CrossHorizontal:
    case NetworkKind::CrossCenter:
      return center_node(nc.i, nc.j);
    case NetworkKind::JunctionVertical:
      return junction_v(nc.i);
    case NetworkKind::JunctionHorizontal:
      return junction_h(nc.j);
    case NetworkKind::Diagonal:
      // Counterclockwise along the diagonal, A reaches its pole first when
      // x < 1/2 (a v-junction) and the vertex first when x > 1/2.
      return nc.coord < 0.5 ? junction_v(nc.i) : junction_h(nc.i);
    case NetworkKind::NotInNetwork:
      break;
  }
  throw std::invalid_argument("node_of: state is not on the network");
}

std::vector<ZigzagLeg> legs_between(const ChainNode& a, const ChainNode& b) {
  const ZigzagCycle& cycle = zigzag_cycle();
  const int ia = cycle.index_of(a);
  const int ib = cycle.index_of(b);
  const int count = (ib - ia + 12) % 12;
  std::vector<ZigzagLeg> legs;
  legs.reserve(count);
  for (int k = 0; k < count; ++k) {
    legs.push_back(cycle.legs[(ia + k) % 12]);
  }
  return legs;
}

}  // namespace wedge
