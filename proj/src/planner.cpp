#include "wedge/planner.hpp"

#include <cmath>
#include <stdexcept>

namespace wedge {

namespace {

constexpr double kZeroLength = 1e-15;

std::vector<PathSegment> retraction_segments(const RetractionMove& move) {
  if (std::fabs(move.a_velocity) < kZeroLength &&
      std::fabs(move.b_velocity) < kZeroLength) {
    return {};
  }
  const RobotMove a{move.a_velocity == 0.0
                        ? std::optional<CircleId>{}
                        : std::optional<CircleId>{move.start.a.is_vertex()
                                                      ? move.end.a.circle()
                                                      : move.start.a.circle()},
                    move.a_velocity};
  const RobotMove b{move.b_velocity == 0.0
                        ? std::optional<CircleId>{}
                        : std::optional<CircleId>{move.start.b.is_vertex()
                                                      ? move.end.b.circle()
                                                      : move.start.b.circle()},
                    move.b_velocity};
  return {make_segment_to(move.start, a, b, move.end)};
}

PathSegment leg_segment(const ZigzagLeg& leg) {
  const Configuration start = node_configuration(leg.from);
  const Configuration end = node_configuration(leg.to);
  RobotMove a{};
  RobotMove b{};
  if (leg.mover == Robot::A) {
    a = {leg.circle, 0.5};
  } else {
    b = {leg.circle, 0.5};
  }
  return make_segment_to(start, a, b, end);
}

double stage_sum(const std::vector<PathSegment>& segments) {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.length_sum();
  return total;
}

}  // namespace

const std::vector<PathSegment>& PlanStages::stage(int index) const {
  switch (index) {
    case 0: return preliminary;
    case 1: return to_node;
    case 2: return zigzag;
    case 3: return from_node;
    case 4: return release;
    default: throw std::out_of_range("plan stage index");
  }
}

std::string to_string(DomainTag tag) {
  switch (tag) {
    case DomainTag::U: return "U";
    case DomainTag::V: return "V";
    case DomainTag::W: return "W";
  }
  return "?";
}

std::vector<PathSegment> step1_to_node(const NetworkClass& nc,
                                       const Configuration& state) {
  switch (nc.kind) {
    case NetworkKind::CrossCenter:
    case NetworkKind::JunctionVertical:
    case NetworkKind::JunctionHorizontal:
      return {};
    case NetworkKind::CrossVertical: {
      // Shorter arc to the pole; |y - 1/2| < 1/2 so it never crosses the
      // vertex.
      const Configuration end = node_configuration(node_of(nc));
      const RobotMove b{state.b.circle(), 0.5 - state.b.t()};
      return {make_segment_to(state, RobotMove{}, b, end)};
    }
    case NetworkKind::CrossHorizontal: {
      const Configuration end = node_configuration(node_of(nc));
      const RobotMove a{state.a.circle(), 0.5 - state.a.t()};
      return {make_segment_to(state, a, RobotMove{}, end)};
    }
    case NetworkKind::Diagonal: {
      const double x = state.a.t();
      const double dist = x < 0.5 ? 0.5 - x : 1.0 - x;
      const Configuration end = node_configuration(node_of(nc));
      const RobotMove a{state.a.circle(), dist};
      const RobotMove b{state.b.circle(), dist};
      return {make_segment_to(state, a, b, end)};
    }
    case NetworkKind::NotInNetwork:
      break;
  }
  throw std::invalid_argument("step1_to_node: state is not on the network");
}

DomainTag classify_domain(const Configuration& initial,
                          const Configuration& final_state, double rho) {
  const int nodes = (is_node(classify_network(initial, rho)) ? 1 : 0) +
                    (is_node(classify_network(final_state, rho)) ? 1 : 0);
  return nodes == 0 ? DomainTag::U : (nodes == 1 ? DomainTag::V : DomainTag::W);
}

Plan plan(const Configuration& initial, const Configuration& final_state,
          double rho) {
  Plan p{initial, final_state,
         classify_domain(initial, final_state, rho),
         junction_v(CircleId::c1), junction_v(CircleId::c1),
         {}, {}, {}, 0.0};

  const RetractionMove pre_i = retract(initial, rho);
  const RetractionMove pre_f = retract(final_state, rho);
  const NetworkClass net_i = classify_network(pre_i.end, rho);
  const NetworkClass net_f = classify_network(pre_f.end, rho);

  p.stages.preliminary = retraction_segments(pre_i);
  p.stages.to_node = step1_to_node(net_i, pre_i.end);
  p.initial_node = node_of(net_i);
  p.final_node = node_of(net_f);
  for (const ZigzagLeg& leg : legs_between(p.initial_node, p.final_node)) {
    p.stages.zigzag.push_back(leg_segment(leg));
  }
  p.stages.from_node = reversed(step1_to_node(net_f, pre_f.end));
  p.stages.release = reversed(retraction_segments(pre_f));

  double total_max = 0.0;
  for (int s = 0; s < 5; ++s) {
    const auto& stage = p.stages.stage(s);
    p.stage_lengths[s] = stage_sum(stage);
    p.total_arc_length += p.stage_lengths[s];
    for (const auto& seg : stage) total_max += seg.length_max();
  }
  for (int s = 0; s < 5; ++s) {
    for (PathSegment seg : p.stages.stage(s)) {
      seg.duration = total_max > 0.0 ? seg.length_max() / total_max : 0.0;
      p.segments.push_back(seg);
    }
  }
  return p;
}

ValidationReport validate_plan(const Plan& p) {
  ValidationReport report =
      validate_segments(p.segments, p.initial, p.final_state);
  auto flag = [&report](std::string check, std::string detail) {
    report.ok = false;
    report.violations.push_back({std::move(check), -1, std::move(detail)});
  };

  // Stage reversal symmetry against an independent recomputation from the
  // final state.
  const RetractionMove pre_f = retract(p.final_state);
  const NetworkClass net_f = classify_network(pre_f.end);
  const auto expect_from_node = reversed(step1_to_node(net_f, pre_f.end));
  const auto expect_release = reversed(retraction_segments(pre_f));
  auto same_geometry = [](const std::vector<PathSegment>& lhs,
                          const std::vector<PathSegment>& rhs) {
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      if (config_distance(lhs[k].start, rhs[k].start) > 1e-12 ||
          config_distance(lhs[k].end, rhs[k].end) > 1e-12 ||
          std::fabs(lhs[k].a.distance - rhs[k].a.distance) > 1e-12 ||
          std::fabs(lhs[k].b.distance - rhs[k].b.distance) > 1e-12) {
        return false;
      }
    }
    return true;
  };
  if (!same_geometry(p.stages.from_node, expect_from_node)) {
    flag("reversal", "from_node stage is not the reverse of the final state's node reduction");
  }
  if (!same_geometry(p.stages.release, expect_release)) {
    flag("reversal", "final stage is not the reverse of the final state's retraction");
  }

  // Node stability: node endpoints produce no reduction moves.
  if (is_node(classify_network(p.initial)) &&
      (!p.stages.preliminary.empty() || !p.stages.to_node.empty())) {
    flag("node-stability", "node initial state produced reduction segments");
  }
  if (is_node(classify_network(p.final_state)) &&
      (!p.stages.from_node.empty() || !p.stages.release.empty())) {
    flag("node-stability", "node final state produced reduction segments");
  }

  if (p.total_arc_length > 10.0) {
    flag("length", "total arc length exceeds 10");
  }
  if (p.stage_lengths[2] > 5.5) {
    flag("length", "zigzag stage exceeds 11 half-circles");
  }
  return report;
}

SampledTrajectory sample(const Plan& p, int resolution) {
  return sample_segments(p.segments, p.initial, resolution);
}

}  // namespace wedge
