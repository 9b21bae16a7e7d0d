#pragma once

#include <array>
#include <string>
#include <vector>

#include "wedge/chain.hpp"
#include "wedge/retraction.hpp"
#include "wedge/trajectory.hpp"

namespace wedge {

/// Which endpoints of a query are nodes (after tolerance snapping):
/// U = neither, V = exactly one, W = both.
enum class DomainTag : std::int8_t { U, V, W };

std::string to_string(DomainTag tag);

inline constexpr std::array<const char*, 5> kStageNames = {
    "preliminary", "to_node", "zigzag", "from_node", "final"};

struct PlanStages {
  std::vector<PathSegment> preliminary;  // retraction of the initial state
  std::vector<PathSegment> to_node;      // network state -> chain node
  std::vector<PathSegment> zigzag;       // counterclockwise node legs
  std::vector<PathSegment> from_node;    // reverse of the final's to_node
  std::vector<PathSegment> release;      // reverse of the final's retraction

  const std::vector<PathSegment>& stage(int index) const;
};

struct Plan {
  Configuration initial;
  Configuration final_state;
  DomainTag domain;
  ChainNode initial_node;
  ChainNode final_node;
  PlanStages stages;
  std::vector<PathSegment> segments;      // flattened; durations sum to 1
  std::array<double, 5> stage_lengths{};  // sum-over-robots arc length
  double total_arc_length = 0.0;
};

/// Moves a network state to its chain node: the non-pole robot of a cross
/// state takes the shorter arc to its pole; a diagonal pair runs ccw in
/// lockstep to the first junction; nodes stay motionless.
std::vector<PathSegment> step1_to_node(const NetworkClass& nc,
                                       const Configuration& state);

DomainTag classify_domain(const Configuration& initial,
                          const Configuration& final_state,
                          double rho = kSnapTolerance);

/// The full section: retraction, node reduction, zigzag traversal, and the
/// reversed reductions of the final state. Deterministic; begins exactly at
/// `initial` and ends exactly at `final_state`.
Plan plan(const Configuration& initial, const Configuration& final_state,
          double rho = kSnapTolerance);

/// Endpoints, chaining, analytic collision-freeness, stage reversal
/// symmetry, and node stability.
ValidationReport validate_plan(const Plan& p);

SampledTrajectory sample(const Plan& p, int resolution);

}  // namespace wedge
