#pragma once

#include "wedge/configuration.hpp"

namespace wedge {

/// One simultaneous constant-velocity move of both robots over an abstract
/// unit of time. Interior states along the move are collision-free and the
/// end state lies on the network.
struct RetractionMove {
  Configuration start;
  Configuration end;
  double a_velocity = 0.0;  // signed arc speed of A on its circle
  double b_velocity = 0.0;
  bool is_zero() const { return a_velocity == 0.0 && b_velocity == 0.0; }
};

/// Displacements of the two chart coordinates under one retraction step.
struct ChartMove {
  double da = 0.0;
  double db = 0.0;
};

/// Same-circle rule: with alpha/beta the robots' distances to the vertex
/// and delta = 1/2 - gap, A's parameter changes by -delta*alpha/(alpha+beta)
/// and B's by +delta*beta/(alpha+beta). The gap moves linearly to exactly
/// 1/2 (an antipodal pair).
ChartMove cylinder_rule(double a, double gap);

/// Distinct-circle rule: radial push-off from the removed corner of the
/// quadrant containing (x, y). Exactly the coordinate with the larger
/// margin to the corner reaches its pole; a robot at the vertex never moves.
ChartMove square_rule(double x, double y);

/// Evaluates the deformation retraction onto the network at a state.
/// Network states (within rho) are fixed: they get a zero or <= rho
/// snap-to-network move.
RetractionMove retract(const Configuration& s, double rho = kSnapTolerance);

/// Linear interpolation along retract(s): tau = 0 gives s, tau = 1 the
/// network end state. Collision-free for every tau in [0, 1].
Configuration evaluate_trace(const Configuration& s, double tau,
                             double rho = kSnapTolerance);

/// The exact network representative of a classified state: poles pinned to
/// t = 1/2, junction partners to the vertex, diagonal partners to the exact
/// antipode. States already on the network are returned unchanged.
Configuration snap_to_network(const Configuration& s, const NetworkClass& nc);

}  // namespace wedge
