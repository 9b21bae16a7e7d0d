#include "wedge/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wedge {

namespace {

constexpr double kChainTolerance = 1e-12;

PhysPoint apply_move(const PhysPoint& p, const RobotMove& move, double fraction) {
  if (!move.circle || move.distance == 0.0) return p;
  return move_on_circle(p, *move.circle, fraction * move.distance);
}

/// Interior times at which a linearly moving parameter passes an integer.
std::vector<double> vertex_pass_times(double t0, double d) {
  std::vector<double> times;
  if (d == 0.0) return times;
  const double t1 = t0 + d;
  const int lo = static_cast<int>(std::floor(std::min(t0, t1))) - 1;
  const int hi = static_cast<int>(std::ceil(std::max(t0, t1))) + 1;
  for (int n = lo; n <= hi; ++n) {
    const double tau = (n - t0) / d;
    if (tau > 0.0 && tau < 1.0) times.push_back(tau);
  }
  return times;
}

double dist_to_integer(double x) {
  const double f = x - std::round(x);
  return std::fabs(f);
}

}  // namespace

double PathSegment::length_max() const {
  return std::max(std::fabs(a.distance), std::fabs(b.distance));
}

double PathSegment::length_sum() const {
  return std::fabs(a.distance) + std::fabs(b.distance);
}

PathSegment make_segment(const Configuration& start, RobotMove a, RobotMove b) {
  const PhysPoint end_a = apply_move(start.a, a, 1.0);
  const PhysPoint end_b = apply_move(start.b, b, 1.0);
  return {start, Configuration(end_a, end_b), a, b, 0.0};
}

PathSegment make_segment_to(const Configuration& start, RobotMove a,
                            RobotMove b, const Configuration& end) {
  const PathSegment derived = make_segment(start, a, b);
  if (config_distance(derived.end, end) > 1e-9) {
    throw std::logic_error("make_segment_to: displacements do not reach the end state");
  }
  return {start, end, a, b, 0.0};
}

PhysPoint segment_position(const PathSegment& seg, Robot robot, double p) {
  const bool is_a = robot == Robot::A;
  if (p <= 0.0) return is_a ? seg.start.a : seg.start.b;
  if (p >= 1.0) return is_a ? seg.end.a : seg.end.b;
  return is_a ? apply_move(seg.start.a, seg.a, p)
              : apply_move(seg.start.b, seg.b, p);
}

Configuration segment_state(const PathSegment& seg, double p) {
  return Configuration(segment_position(seg, Robot::A, p),
                       segment_position(seg, Robot::B, p));
}

std::vector<PathSegment> reversed(const std::vector<PathSegment>& segments) {
  std::vector<PathSegment> out;
  out.reserve(segments.size());
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    PathSegment r = *it;
    std::swap(r.start, r.end);
    r.a.distance = -r.a.distance;
    r.b.distance = -r.b.distance;
    out.push_back(r);
  }
  return out;
}

std::vector<PathSegment> concat(const std::vector<std::vector<PathSegment>>& parts) {
  std::vector<PathSegment> out;
  for (const auto& part : parts) {
    for (const auto& seg : part) {
      if (!out.empty() && out.back().end != seg.start) {
        throw std::invalid_argument("concat: segment endpoints do not chain");
      }
      out.push_back(seg);
    }
  }
  return out;
}

SampledTrajectory sample_segments(std::span<const PathSegment> segments,
                                  const Configuration& whole_start,
                                  int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("sample resolution must be at least 2");
  }
  SampledTrajectory out;
  out.times.reserve(resolution);
  out.states.reserve(resolution);

  std::vector<double> cumulative(segments.size() + 1, 0.0);
  for (std::size_t k = 0; k < segments.size(); ++k) {
    cumulative[k + 1] = cumulative[k] + segments[k].duration;
  }
  if (!segments.empty()) cumulative.back() = 1.0;

  std::size_t at = 0;
  for (int i = 0; i < resolution; ++i) {
    const double tau = static_cast<double>(i) / (resolution - 1);
    out.times.push_back(tau);
    if (segments.empty()) {
      out.states.push_back(whole_start);
      continue;
    }
    while (at + 1 < segments.size() && tau > cumulative[at + 1]) ++at;
    const double dur = cumulative[at + 1] - cumulative[at];
    const double p = dur > 0.0 ? (tau - cumulative[at]) / dur : 1.0;
    out.states.push_back(segment_state(segments[at], p));
  }
  return out;
}

ValidationReport validate_segments(std::span<const PathSegment> segments,
                                   const Configuration& expected_start,
                                   const Configuration& expected_end) {
  ValidationReport report;
  auto flag = [&report](std::string check, int index, std::string detail) {
    report.ok = false;
    report.violations.push_back({std::move(check), index, std::move(detail)});
  };

  const Configuration& actual_start =
      segments.empty() ? expected_start : segments.front().start;
  const Configuration& actual_end =
      segments.empty() ? expected_start : segments.back().end;
  if (config_distance(actual_start, expected_start) > 1e-9) {
    flag("endpoint", -1, "path does not begin at the initial state");
  }
  if (config_distance(actual_end, expected_end) > 1e-9) {
    flag("endpoint", -1, "path does not end at the final state");
  }

  for (std::size_t k = 0; k < segments.size(); ++k) {
    const PathSegment& seg = segments[k];
    const int idx = static_cast<int>(k);

    if (k > 0 && config_distance(segments[k - 1].end, seg.start) > kChainTolerance) {
      flag("chaining", idx, "segment start does not match previous end");
    }

    const PathSegment derived = make_segment(seg.start, seg.a, seg.b);
    if (config_distance(derived.end, seg.end) > kChainTolerance) {
      flag("consistency", idx, "moves applied to start do not yield end");
    }
    if ((seg.a.distance != 0.0 && !seg.a.circle) ||
        (seg.b.distance != 0.0 && !seg.b.circle)) {
      flag("consistency", idx, "moving robot lacks a circle");
    }

    // Effective circle of each robot during the segment; nullopt = parked
    // at the vertex.
    const auto circle_of = [](const PhysPoint& p, const RobotMove& m)
        -> std::optional<CircleId> {
      if (m.circle && m.distance != 0.0) return *m.circle;
      if (p.is_vertex()) return std::nullopt;
      return p.circle();
    };
    const auto ca = circle_of(seg.start.a, seg.a);
    const auto cb = circle_of(seg.start.b, seg.b);
    const double ta0 = seg.start.a.t_or_zero();
    const double tb0 = seg.start.b.t_or_zero();
    const double da = seg.a.distance;
    const double db = seg.b.distance;

    if (ca && cb && *ca == *cb) {
      // Shared circle: the relative gap is linear; a collision is a gap
      // crossing an integer strictly inside the segment.
      const double g0 = tb0 - ta0;
      const double g1 = g0 + (db - da);
      const double lo = std::min(g0, g1);
      const double hi = std::max(g0, g1);
      for (int n = static_cast<int>(std::floor(lo));
           n <= static_cast<int>(std::ceil(hi)); ++n) {
        if (n > lo && n < hi) {
          flag("collision", idx, "robots cross on a shared circle");
          break;
        }
      }
    } else {
      // Distinct circles (or a robot parked at the vertex): the only
      // collision locus is the vertex itself. Check each robot's interior
      // vertex passes against the other robot's distance to the vertex.
      bool flagged = false;
      for (double tau : vertex_pass_times(ta0, da)) {
        const double other = cb ? dist_to_integer(tb0 + tau * db) : 0.0;
        if (other <= kCollisionTolerance) {
          flag("collision", idx, "both robots at the vertex simultaneously");
          flagged = true;
          break;
        }
      }
      for (double tau : flagged ? std::vector<double>{} : vertex_pass_times(tb0, db)) {
        const double other = ca ? dist_to_integer(ta0 + tau * da) : 0.0;
        if (other <= kCollisionTolerance) {
          flag("collision", idx, "both robots at the vertex simultaneously");
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace wedge
