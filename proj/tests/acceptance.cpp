// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wedge/discrete_complex.hpp"
#include "wedge/io.hpp"
#include "wedge/probes.hpp"

using namespace wedge;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  %d. %-28s %s\n", pass ? "PASS" : "FAIL", number, name,
              detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Configuration make(CircleId ca, double ta, CircleId cb, double tb) {
  return Configuration(PhysPoint::on_circle(ca, ta), PhysPoint::on_circle(cb, tb));
}

// ---- 1. topology triple agreement ----------------------------------------

void criterion_topology() {
  bool pass = true;
  std::ostringstream detail;

  const int chain_betti = build_chain().first_betti();
  pass &= chain_betti == 19;
  detail << "chain b1=" << chain_betti;

  double worst_seconds = 0.0;
  for (int k = 3; k <= 8; ++k) {
    const auto start = Clock::now();
    const DiscreteComplexSummary s = build_complex(subdivided_wedge(k), k);
    worst_seconds = std::max(worst_seconds, seconds_since(start));
    pass &= s.connected && s.first_betti == 19;
    if (s.first_betti != 19) detail << " k=" << k << " b1=" << s.first_betti;
  }
  detail << ", complex b1=19 for k=3..8";

  pass &= farber_tc(19) == 3;
  detail << ", tc(19)=" << farber_tc(19);
  pass &= worst_seconds < 1.0;
  detail << ", worst " << worst_seconds << " s/k";
  report(1, "topology-triple-agreement", pass, detail.str());
}

// ---- 2. zigzag structure ---------------------------------------------------

void criterion_zigzag() {
  bool pass = true;
  std::ostringstream detail;
  const ZigzagCycle& cycle = zigzag_cycle();

  for (int k = 0; k < 12; ++k) {
    const ZigzagLeg& leg = cycle.legs[k];
    pass &= leg.to == cycle.legs[(k + 1) % 12].from;
    pass &= leg.kind ==
            (k % 2 == 0 ? LegKind::VertexToPole : LegKind::PoleToVertex);
    pass &= leg.t_to == leg.t_from + 0.5;
    for (int m = k + 1; m < 12; ++m) {
      pass &= !(cycle.node_at(k) == cycle.node_at(m));
    }
    const Configuration from = node_configuration(leg.from);
    const Configuration to = node_configuration(leg.to);
    const PhysPoint parked = leg.mover == Robot::A ? from.b : from.a;
    const PhysPoint parked_end = leg.mover == Robot::A ? to.b : to.a;
    pass &= parked == parked_end && parked.t() == 0.5 &&
            parked.circle() != leg.circle;
    const PhysPoint moving = leg.mover == Robot::A ? from.a : from.b;
    pass &= move_on_circle(moving, leg.circle, 0.5) ==
            (leg.mover == Robot::A ? to.a : to.b);
  }
  detail << "12 legs closed, alternating, ccw half-circles";

  auto swapped = [](const ChainNode& n) {
    switch (n.kind) {
      case ChainNodeKind::Center: return center_node(n.j, n.i);
      case ChainNodeKind::JunctionV: return junction_h(n.i);
      case ChainNodeKind::JunctionH: return junction_v(n.j);
    }
    return n;
  };
  for (int k = 0; k < 12; ++k) {
    pass &= swapped(cycle.node_at(k)) == cycle.node_at((k + 6) % 12);
  }
  detail << ", swap = 6-shift";
  report(2, "zigzag-structure", pass, detail.str());
}

// ---- 3. planner validity sweep ---------------------------------------------

void criterion_validity() {
  const auto start = Clock::now();
  SuiteOptions options;
  options.trials = 10000;
  options.seed = 7;
  const SuiteReport sweep = run_validity_suite(options);

  // Byte-exact determinism of the wire format on a sample of queries.
  bool bytes_equal = true;
  for (int i = 0; i < 32; ++i) {
    std::mt19937_64 rng(split_seed(7, i));
    const Configuration a = random_configuration(rng);
    const Configuration b = random_configuration(rng);
    const std::string first = io::plan_document(plan(a, b)).dump();
    const std::string second = io::plan_document(plan(a, b)).dump();
    bytes_equal &= first == second;
  }

  const double elapsed = seconds_since(start);
  const bool pass = sweep.ok() && bytes_equal &&
                    sweep.max_endpoint_error <= 1e-9 &&
                    sweep.max_total_length <= 10.0 &&
                    sweep.max_zigzag_length <= 5.5 && elapsed < 30.0;
  std::ostringstream detail;
  detail << sweep.trials << " queries, " << sweep.failures.size()
         << " failures, max endpoint " << sweep.max_endpoint_error
         << ", max length " << sweep.max_total_length << ", "
         << (bytes_equal ? "byte-deterministic" : "NON-DETERMINISTIC") << ", "
         << elapsed << " s";
  report(3, "planner-validity-sweep", pass, detail.str());
}

// ---- 4. retraction contract ------------------------------------------------

void criterion_retraction() {
  bool pass = true;
  std::ostringstream detail;

  // Network states are fixed.
  double worst_fix = 0.0;
  for (CircleId i : all_circles()) {
    for (CircleId j : all_circles()) {
      if (i == j) continue;
      for (int step = 1; step < 200; ++step) {
        const Configuration cross = make(i, 0.5, j, step / 200.0);
        worst_fix = std::max(worst_fix,
                             config_distance(retract(cross).end, cross));
      }
    }
    for (int step = 1; step < 200; ++step) {
      if (step == 100) continue;
      const PhysPoint a = PhysPoint::on_circle(i, step / 200.0);
      const Configuration diag(a, antipode_on(i, a));
      worst_fix = std::max(worst_fix, config_distance(retract(diag).end, diag));
    }
  }
  pass &= worst_fix <= 1e-12;
  detail << "network fixed to " << worst_fix;

  // Boundary agreement between the two chart rules.
  double worst_boundary = 0.0;
  for (int step = 1; step < 1000; ++step) {
    const double y = step / 1000.0;
    if (y == 0.5) continue;
    const ChartMove sq = square_rule(0.0, y);
    const ChartMove cy = cylinder_rule(0.0, y);
    worst_boundary = std::max({worst_boundary, std::fabs(sq.da - cy.da),
                               std::fabs(sq.db - cy.db)});
    const ChartMove sq_b = square_rule(y, 0.0);
    const ChartMove cy_b = cylinder_rule(y, 1.0 - y);
    worst_boundary = std::max({worst_boundary, std::fabs(sq_b.da - cy_b.da),
                               std::fabs(sq_b.db - cy_b.db)});
  }
  pass &= worst_boundary <= 1e-12;
  detail << ", boundary gap " << worst_boundary;

  // Same-circle traces keep the gap strictly inside (0, 1).
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> circle(1, 3);
  bool gap_ok = true;
  for (int i = 0; i < 20000; ++i) {
    const CircleId c = circle_from_int(circle(rng));
    const PhysPoint a = PhysPoint::on_circle(c, unit(rng));
    const PhysPoint b = PhysPoint::on_circle(c, unit(rng));
    if (a.is_vertex() || b.is_vertex() || a == b) continue;
    const Configuration s(a, b);
    const double g0 = wrap_unit(s.b.t() - s.a.t());
    const double bound = std::min({g0, 1.0 - g0, 0.5}) * (1.0 - 1e-9);
    for (int k = 1; k <= 25; ++k) {
      const Configuration state = evaluate_trace(s, k / 25.0);
      const double g = wrap_unit(state.b.t_or_zero() - state.a.t_or_zero());
      gap_ok &= g >= bound && g <= 1.0 - bound;
    }
  }
  pass &= gap_ok;
  detail << (gap_ok ? ", gaps strictly interior" : ", GAP ESCAPED");
  report(4, "retraction-contract", pass, detail.str());
}

// ---- 5. golden scenario ----------------------------------------------------

void criterion_golden() {
  bool pass = true;
  std::ostringstream detail;

  const Plan p = plan(make(CircleId::c1, 0.2, CircleId::c1, 0.6),
                      make(CircleId::c2, 0.9, CircleId::c3, 0.4));
  pass &= p.segments.size() == 13;
  detail << p.segments.size() << " segments";

  std::ifstream fixture(std::string(WEDGE_FIXTURE_DIR) + "/golden_plan.json");
  if (!fixture) {
    report(5, "golden-scenario", false, "fixture missing");
    return;
  }
  const json expected = json::parse(fixture);
  const json actual = io::plan_document(p);

  double worst = 0.0;
  for (int s = 0; s < 5; ++s) {
    const double want = expected["stages"][s]["arc_length"].get<double>();
    worst = std::max(worst, std::fabs(p.stage_lengths[s] - want));
    pass &= expected["stages"][s]["name"] == kStageNames[s];
  }
  worst = std::max(worst, std::fabs(p.total_arc_length -
                                    expected["total_arc_length"].get<double>()));
  pass &= worst <= 1e-9;
  detail << ", stage lengths within " << worst;
  pass &= actual == expected;
  detail << (actual == expected ? ", document identical" : ", DOCUMENT DRIFTED");
  report(5, "golden-scenario", pass, detail.str());
}

// ---- 6. continuity ----------------------------------------------------------

void criterion_continuity() {
  bool pass = true;
  std::ostringstream detail;

  for (DomainTag region : {DomainTag::U, DomainTag::V, DomainTag::W}) {
    ContinuityOptions options;
    options.region = region;
    options.delta = 1e-4;
    options.margin = 1e-3;
    options.trials = 500;
    options.seed = 7;
    const ContinuityReport r = continuity_probe(options);
    pass &= r.max_modulus <= 0.05 && r.violations.empty();
    detail << to_string(region) << " max " << r.max_modulus << "  ";
  }

  // Linear scaling of the modulus in delta, margin 1e-2.
  std::vector<double> normalized;
  for (double delta : {1e-5, 1e-4, 1e-3}) {
    ContinuityOptions options;
    options.delta = delta;
    options.margin = 1e-2;
    options.trials = 200;
    options.seed = 7;
    const ContinuityReport r = continuity_probe(options);
    normalized.push_back(r.max_modulus / delta);
  }
  for (std::size_t i = 1; i < normalized.size(); ++i) {
    pass &= normalized[i] <= normalized[0] * 3.0 &&
            normalized[i] >= normalized[0] / 3.0;
  }
  detail << "scaling " << normalized[0] << "/" << normalized[1] << "/"
         << normalized[2];

  // The vertex-crossing loci are reported, not failed on.
  ContinuityOptions straddle;
  straddle.margin = 0.0;
  straddle.delta = 1e-4;
  straddle.trials = 12;
  const ContinuityReport loci = continuity_probe(straddle);
  bool classified = !loci.violations.empty();
  for (const auto& v : loci.violations) {
    classified &= v.locus == "vertex-crossing";
  }
  pass &= classified;
  detail << ", " << loci.violations.size() << " vertex-crossing loci reported";
  report(6, "continuity-domains", pass, detail.str());
}

// ---- 7. negative controls ----------------------------------------------------

int run_cli(const std::string& args) {
  const char* bin = std::getenv("WEDGEPLAN_BIN");
  const std::string command =
      std::string(bin ? bin : "./wedgeplan") + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

void criterion_negative_controls() {
  bool pass = true;
  std::ostringstream detail;

  const int colliding = run_cli(
      "plan --inline '{\"initial\": {\"A\": {\"circle\": 1, \"t\": 0.4}, "
      "\"B\": {\"circle\": 1, \"t\": 0.4}}, \"final\": {\"A\": {\"vertex\": true}, "
      "\"B\": {\"circle\": 3, \"t\": 0.4}}}'");
  pass &= colliding == 2;
  detail << "colliding input exit " << colliding;

  const int faulted =
      run_cli("verify --trials 40 --continuity-trials 8 --inject-fault skip-from-node");
  pass &= faulted == 1;
  detail << ", injected fault exit " << faulted;

  const int healthy = run_cli("verify --trials 40 --continuity-trials 8");
  pass &= healthy == 0;
  detail << ", healthy verify exit " << healthy;

  const DiscreteComplexSummary control = build_complex(cycle_graph(4));
  pass &= control.first_betti == 1 && control.tc == 2;
  detail << ", single-circle b1=" << control.first_betti
         << " tc=" << control.tc;
  report(7, "negative-controls", pass, detail.str());
}

}  // namespace

int main() {
  criterion_topology();
  criterion_zigzag();
  criterion_validity();
  criterion_retraction();
  criterion_golden();
  criterion_continuity();
  criterion_negative_controls();
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
