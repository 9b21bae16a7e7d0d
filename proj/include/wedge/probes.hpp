#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wedge/planner.hpp"

namespace wedge {

/// Deterministic per-trial seed derivation (splitmix64 over seed, index).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

/// A uniformly drawn collision-free state: occasionally a robot at the
/// vertex, otherwise a uniform circle point; robots are kept at least
/// `min_separation` apart so perturbation and sampling checks stay
/// well-posed.
Configuration random_configuration(std::mt19937_64& rng,
                                   double min_separation = 1e-4);

struct SuiteOptions {
  int trials = 1000;
  std::uint64_t seed = 7;
  bool parallel = true;
  /// Negative control: drop the from_node stage of every plan before
  /// validation; a healthy checker must report the breakage.
  bool inject_skip_from_node = false;
};

struct TrialFailure {
  int trial = -1;
  std::string check;
  std::string detail;
};

struct SuiteReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialFailure> failures;
  double max_endpoint_error = 0.0;
  double max_total_length = 0.0;
  double max_zigzag_length = 0.0;
  bool ok() const { return failures.empty(); }
};

/// Plans seeded random queries and checks endpoints, chaining, analytic
/// and sampled (arc step 1e-3) collision-freeness, stage reversal, node
/// stability, length bounds, and bitwise determinism.
SuiteReport run_validity_suite(const SuiteOptions& options);

struct ContinuityOptions {
  DomainTag region = DomainTag::U;
  double delta = 1e-4;
  /// Minimum distance of sampled base states from the decision loci
  /// (nodes, either robot at the vertex, poles, same-circle antipodal
  /// pairs). Must exceed delta. A non-positive margin switches to the
  /// straddle probe, which builds query pairs across a vertex-crossing
  /// locus on purpose.
  double margin = 1e-3;
  int trials = 500;
  std::uint64_t seed = 7;
  int resolution = 2049;   // trajectory comparison grid
  double threshold = 0.05; // modulus above which a trial is recorded
  bool parallel = true;
};

struct ContinuityViolation {
  int trial = -1;
  double modulus = 0.0;
  std::string locus;  // "vertex-crossing", "node-proximity", "unclassified"
};

struct ContinuityReport {
  DomainTag region = DomainTag::U;
  double delta = 0.0;
  double margin = 0.0;
  int trials = 0;
  double max_modulus = 0.0;
  std::vector<ContinuityViolation> violations;
};

/// Measures the planner's modulus of continuity within one region: base
/// queries are sampled in the region (margin-filtered), endpoints are
/// perturbed by at most delta without leaving the region (node endpoints
/// slide only their pole robots; vertex robots stay put), and the sup-time
/// distance between the base and perturbed trajectories is reported.
ContinuityReport continuity_probe(const ContinuityOptions& options);

/// Smallest distance from the state's decision quantities to the loci the
/// continuity probe must stay away from.
double decision_margin(const Configuration& s);

}  // namespace wedge
