#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wedge/configuration.hpp"

namespace wedge {

/// Constant-velocity motion of one robot within a segment. A stationary
/// robot has no circle; a robot starting at the vertex names the circle it
/// enters.
struct RobotMove {
  std::optional<CircleId> circle;
  double distance = 0.0;  // signed arc displacement, ccw positive
};

/// One piece of a piecewise path: both robots advance linearly from start
/// to end over `duration` (a fraction of the whole plan's unit time).
struct PathSegment {
  Configuration start;
  Configuration end;
  RobotMove a;
  RobotMove b;
  double duration = 0.0;

  /// max over robots of |displacement| (the speed metric used for timing).
  double length_max() const;
  /// sum over robots of |displacement| (total arc length contribution).
  double length_sum() const;
};

/// Builds a segment from a start state and per-robot displacements; the
/// end state is derived. Displacement entry circles must be consistent
/// with the start state.
PathSegment make_segment(const Configuration& start, RobotMove a, RobotMove b);

/// As make_segment but pinning the end state exactly (the displacements
/// must agree with it up to floating error).
PathSegment make_segment_to(const Configuration& start, RobotMove a,
                            RobotMove b, const Configuration& end);

/// Robot position at interpolation parameter p in [0, 1]; p = 0 and 1
/// return the stored endpoints exactly.
PhysPoint segment_position(const PathSegment& seg, Robot robot, double p);
Configuration segment_state(const PathSegment& seg, double p);

/// Time reversal: reverses the list, swaps endpoints, negates
/// displacements. An involution.
std::vector<PathSegment> reversed(const std::vector<PathSegment>& segments);

/// Concatenates lists, requiring exact endpoint chaining between
/// consecutive nonempty parts.
std::vector<PathSegment> concat(const std::vector<std::vector<PathSegment>>& parts);

struct SampledTrajectory {
  std::vector<double> times;               // uniform grid over [0, 1]
  std::vector<Configuration> states;
};

/// Samples a chained segment list at `resolution` >= 2 uniform times,
/// using the segments' durations (which must sum to 1 unless the list is
/// empty, in which case every sample equals `whole_start`).
SampledTrajectory sample_segments(std::span<const PathSegment> segments,
                                  const Configuration& whole_start,
                                  int resolution);

struct Violation {
  std::string check;   // "endpoint", "chaining", "collision", "consistency"
  int segment = -1;    // index where detected, -1 for whole-path checks
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Minimum gap a segment interior may approach on a shared circle before
/// being reported (segment endpoints are declared states and exempt).
inline constexpr double kCollisionTolerance = 1e-6;

/// Checks endpoint agreement, exact chaining, per-segment consistency and
/// collision-freeness (same-circle gap crossings and simultaneous vertex
/// passes are detected analytically).
ValidationReport validate_segments(std::span<const PathSegment> segments,
                                   const Configuration& expected_start,
                                   const Configuration& expected_end);

}  // namespace wedge
