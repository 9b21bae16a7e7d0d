#include "wedge/probes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wedge {

namespace {

const std::vector<Configuration>& node_states() {
  static const std::vector<Configuration> states = [] {
    std::vector<Configuration> out;
    const ZigzagCycle& cycle = zigzag_cycle();
    for (int k = 0; k < 12; ++k) {
      out.push_back(node_configuration(cycle.node_at(k)));
    }
    return out;
  }();
  return states;
}

double pole_distance(const PhysPoint& p) {
  return p.is_vertex() ? 0.5 : std::fabs(p.t() - 0.5);
}

PhysPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < 1.0 / 12.0) return PhysPoint::vertex();
  std::uniform_int_distribution<int> circle(1, 3);
  return PhysPoint::on_circle(circle_from_int(circle(rng)), unit(rng));
}

/// Non-node state with all decision quantities at least `margin` away
/// from their loci; both robots end up strictly inside circle arcs.
Configuration random_margin_state(std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> circle(1, 3);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const PhysPoint a = PhysPoint::on_circle(circle_from_int(circle(rng)), unit(rng));
    const PhysPoint b = PhysPoint::on_circle(circle_from_int(circle(rng)), unit(rng));
    if (a == b) continue;
    const Configuration s(a, b);
    if (decision_margin(s) >= margin) return s;
  }
  throw std::runtime_error("margin sampling failed; margin too large");
}

PhysPoint slide(const PhysPoint& p, double offset) {
  if (p.is_vertex() || offset == 0.0) return p;
  return move_on_circle(p, p.circle(), offset);
}

/// Perturbs every robot that sits on a circle by +-delta along it; vertex
/// robots cannot leave the region-defining stratum and stay put.
Configuration perturb(const Configuration& s, double delta, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  const double da = (coin(rng) ? 1.0 : -1.0) * delta;
  const double db = (coin(rng) ? 1.0 : -1.0) * delta;
  return Configuration(slide(s.a, da), slide(s.b, db));
}

double trajectory_modulus(const Plan& base, const Plan& other, int resolution) {
  const SampledTrajectory lhs = sample(base, resolution);
  const SampledTrajectory rhs = sample(other, resolution);
  double worst = 0.0;
  for (int i = 0; i < resolution; ++i) {
    worst = std::max(worst, config_distance(lhs.states[i], rhs.states[i]));
  }
  return worst;
}

std::string classify_locus(const std::vector<const Configuration*>& endpoints,
                           double delta) {
  for (const Configuration* s : endpoints) {
    const double dv = std::min(dist_to_vertex(s->a), dist_to_vertex(s->b));
    if (dv <= 2.0 * delta &&
        !(s->a.is_vertex() || s->b.is_vertex())) {
      return "vertex-crossing";
    }
  }
  for (const Configuration* s : endpoints) {
    double nearest = 1.0;
    for (const auto& node : node_states()) {
      nearest = std::min(nearest, config_distance(*s, node));
    }
    if (nearest <= 2.0 * delta && nearest > 0.0) return "node-proximity";
  }
  return "unclassified";
}

bool bitwise_equal(const Plan& lhs, const Plan& rhs) {
  if (lhs.segments.size() != rhs.segments.size()) return false;
  for (std::size_t k = 0; k < lhs.segments.size(); ++k) {
    const PathSegment& s = lhs.segments[k];
    const PathSegment& t = rhs.segments[k];
    if (s.start != t.start || s.end != t.end ||
        s.a.distance != t.a.distance || s.b.distance != t.b.distance ||
        s.duration != t.duration || s.a.circle != t.a.circle ||
        s.b.circle != t.b.circle) {
      return false;
    }
  }
  return lhs.total_arc_length == rhs.total_arc_length;
}

Plan with_skipped_from_node(const Plan& p) {
  Plan broken = p;
  broken.stages.from_node.clear();
  broken.segments.clear();
  double total_max = 0.0;
  for (int s = 0; s < 5; ++s) {
    for (const auto& seg : broken.stages.stage(s)) total_max += seg.length_max();
  }
  for (int s = 0; s < 5; ++s) {
    for (PathSegment seg : broken.stages.stage(s)) {
      seg.duration = total_max > 0.0 ? seg.length_max() / total_max : 0.0;
      broken.segments.push_back(seg);
    }
  }
  return broken;
}

}  // namespace

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Configuration random_configuration(std::mt19937_64& rng, double min_separation) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const PhysPoint a = random_point(rng);
    const PhysPoint b = random_point(rng);
    if (a == b || gamma_distance(a, b) < min_separation) continue;
    return Configuration(a, b);
  }
  throw std::runtime_error("random configuration sampling failed");
}

double decision_margin(const Configuration& s) {
  double margin = gamma_distance(s.a, s.b);  // collision margin
  margin = std::min(margin, dist_to_vertex(s.a));
  margin = std::min(margin, dist_to_vertex(s.b));
  margin = std::min(margin, pole_distance(s.a));
  margin = std::min(margin, pole_distance(s.b));
  for (const auto& node : node_states()) {
    margin = std::min(margin, config_distance(s, node));
  }
  if (!s.a.is_vertex() && !s.b.is_vertex() && s.a.circle() == s.b.circle()) {
    const double gap = wrap_unit(s.b.t() - s.a.t());
    margin = std::min(margin, std::fabs(gap - 0.5));
  }
  return margin;
}

SuiteReport run_validity_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.trials = options.trials;
  report.seed = options.seed;
  if (options.trials <= 0) return report;

  std::vector<std::vector<TrialFailure>> failures(options.trials);
  std::vector<double> endpoint_errors(options.trials, 0.0);
  std::vector<double> total_lengths(options.trials, 0.0);
  std::vector<double> zigzag_lengths(options.trials, 0.0);

#pragma omp parallel for schedule(dynamic, 16) if (options.parallel)
  for (int trial = 0; trial < options.trials; ++trial) {
    auto fail = [&](std::string check, std::string detail) {
      failures[trial].push_back({trial, std::move(check), std::move(detail)});
    };
    try {
      std::mt19937_64 rng(split_seed(options.seed, trial));
      const Configuration initial = random_configuration(rng);
      const Configuration final_state = random_configuration(rng);
      Plan p = plan(initial, final_state);
      if (options.inject_skip_from_node) p = with_skipped_from_node(p);

      const ValidationReport validation = validate_plan(p);
      for (const auto& v : validation.violations) {
        fail(v.check, v.detail);
      }

      endpoint_errors[trial] =
          std::max(config_distance(p.segments.empty() ? p.initial
                                                      : p.segments.front().start,
                                   initial),
                   config_distance(p.segments.empty() ? p.initial
                                                      : p.segments.back().end,
                                   final_state));
      if (endpoint_errors[trial] > 1e-9) {
        fail("endpoint", "endpoint error above 1e-9");
      }
      total_lengths[trial] = p.total_arc_length;
      zigzag_lengths[trial] = p.stage_lengths[2];

      // Sampled sweep at arc step 1e-3.
      double speed_total = 0.0;
      for (const auto& seg : p.segments) speed_total += seg.length_max();
      const int resolution =
          std::max(2, static_cast<int>(std::ceil(speed_total / 1e-3)) + 1);
      const SampledTrajectory traj = sample(p, resolution);
      for (const auto& state : traj.states) {
        if (gamma_distance(state.a, state.b) < 1e-9) {
          fail("collision", "sampled state closer than 1e-9");
          break;
        }
      }

      // Bitwise determinism of replanning.
      const Plan again = plan(initial, final_state);
      if (!bitwise_equal(options.inject_skip_from_node
                             ? with_skipped_from_node(again)
                             : again,
                         p)) {
        fail("determinism", "replanning produced a different plan");
      }
    } catch (const std::exception& e) {
      fail("exception", e.what());
    }
  }

  for (int trial = 0; trial < options.trials; ++trial) {
    report.failures.insert(report.failures.end(), failures[trial].begin(),
                           failures[trial].end());
    report.max_endpoint_error =
        std::max(report.max_endpoint_error, endpoint_errors[trial]);
    report.max_total_length =
        std::max(report.max_total_length, total_lengths[trial]);
    report.max_zigzag_length =
        std::max(report.max_zigzag_length, zigzag_lengths[trial]);
  }
  return report;
}

ContinuityReport continuity_probe(const ContinuityOptions& options) {
  if (options.margin > 0.0 && options.delta >= options.margin) {
    throw std::invalid_argument("continuity probe requires delta < margin");
  }
  ContinuityReport report;
  report.region = options.region;
  report.delta = options.delta;
  report.margin = options.margin;
  report.trials = options.trials;
  if (options.trials <= 0) return report;

  std::vector<double> moduli(options.trials, 0.0);
  std::vector<std::string> loci(options.trials);

#pragma omp parallel for schedule(dynamic, 4) if (options.parallel)
  for (int trial = 0; trial < options.trials; ++trial) {
    try {
    std::mt19937_64 rng(split_seed(options.seed ^ 0xC0417EC5u, trial));
    std::uniform_int_distribution<int> node_pick(0, 11);
    std::uniform_int_distribution<int> coin(0, 1);

    if (options.margin <= 0.0) {
      // Straddle probe: two queries delta-apart whose initial states put
      // robot B just inside two different circles at the vertex.
      const CircleId pole_circle = circle_from_int(1 + trial % 3);
      const CircleId first = succ(pole_circle);
      const CircleId second = succ(first);
      const double eps = options.delta / 2.0;
      const Configuration final_state = random_margin_state(rng, 1e-3);
      const Configuration base(PhysPoint::on_circle(pole_circle, 0.5),
                               PhysPoint::on_circle(first, eps));
      const Configuration moved(PhysPoint::on_circle(pole_circle, 0.5),
                                PhysPoint::on_circle(second, eps));
      const Plan base_plan = plan(base, final_state);
      const Plan other_plan = plan(moved, final_state);
      moduli[trial] = trajectory_modulus(base_plan, other_plan, options.resolution);
      loci[trial] = classify_locus({&base, &moved}, options.delta);
      continue;
    }

    const bool node_first = coin(rng) == 1;
    auto draw_endpoint = [&](bool as_node) {
      if (as_node) {
        return node_configuration(zigzag_cycle().node_at(node_pick(rng)));
      }
      return random_margin_state(rng, options.margin);
    };
    const bool initial_is_node = options.region == DomainTag::W ||
                                 (options.region == DomainTag::V && node_first);
    const bool final_is_node = options.region == DomainTag::W ||
                               (options.region == DomainTag::V && !node_first);
    const Configuration initial = draw_endpoint(initial_is_node);
    const Configuration final_state = draw_endpoint(final_is_node);
    const Configuration initial_p = perturb(initial, options.delta, rng);
    const Configuration final_p = perturb(final_state, options.delta, rng);

    const Plan base_plan = plan(initial, final_state);
    const Plan other_plan = plan(initial_p, final_p);
    moduli[trial] = trajectory_modulus(base_plan, other_plan, options.resolution);
    loci[trial] = classify_locus({&initial, &final_state, &initial_p, &final_p},
                                 options.delta);
    } catch (const std::exception& e) {
      moduli[trial] = std::numeric_limits<double>::infinity();
      loci[trial] = std::string("error: ") + e.what();
    }
  }

  for (int trial = 0; trial < options.trials; ++trial) {
    report.max_modulus = std::max(report.max_modulus, moduli[trial]);
    if (moduli[trial] > options.threshold) {
      report.violations.push_back({trial, moduli[trial], loci[trial]});
    }
  }
  return report;
}

}  // namespace wedge
