#include "wedge/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wedge::io {

using nlohmann::json;

double round_sig12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return std::strtod(buffer, nullptr);
}

json position_to_json(const PhysPoint& p) {
  if (p.is_vertex()) return json{{"vertex", true}};
  return json{{"circle", to_int(p.circle())}, {"t", round_sig12(p.t())}};
}

PhysPoint position_from_json(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("position must be an object");
  }
  if (j.contains("vertex")) {
    if (!j["vertex"].is_boolean() || !j["vertex"].get<bool>()) {
      throw std::invalid_argument("\"vertex\" must be true when present");
    }
    return PhysPoint::vertex();
  }
  if (!j.contains("circle") || !j.contains("t")) {
    throw std::invalid_argument("position needs {\"vertex\": true} or {\"circle\", \"t\"}");
  }
  if (!j["circle"].is_number_integer()) {
    throw std::invalid_argument("\"circle\" must be an integer");
  }
  const CircleId circle = circle_from_int(j["circle"].get<int>());
  if (!j["t"].is_number()) {
    throw std::invalid_argument("\"t\" must be a number");
  }
  const double t = j["t"].get<double>();
  if (!(t > 0.0 && t < 1.0)) {
    throw std::invalid_argument("arc parameter t must lie strictly inside (0, 1)");
  }
  return PhysPoint::on_circle(circle, t);
}

namespace {

Configuration configuration_from_json(const json& j, const char* label) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
    throw std::invalid_argument(std::string(label) + " needs positions \"A\" and \"B\"");
  }
  return Configuration(position_from_json(j["A"]), position_from_json(j["B"]));
}

json configuration_to_json(const Configuration& s) {
  return json{{"A", position_to_json(s.a)}, {"B", position_to_json(s.b)}};
}

json move_to_json(const PhysPoint& start, const RobotMove& move) {
  if (!move.circle || move.distance == 0.0) return nullptr;
  const double from = start.is_vertex() ? (move.distance > 0.0 ? 0.0 : 1.0)
                                        : start.t();
  return json{{"circle", to_int(*move.circle)},
              {"t_from", round_sig12(from)},
              {"t_to", round_sig12(from + move.distance)},
              {"distance", round_sig12(move.distance)}};
}

json trajectory_to_json(const Plan& p, int samples) {
  const SampledTrajectory traj = sample(p, samples);
  json lines = json::array();
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    lines.push_back(json{{"time", round_sig12(traj.times[i])},
                         {"A", position_to_json(traj.states[i].a)},
                         {"B", position_to_json(traj.states[i].b)}});
  }
  return lines;
}

}  // namespace

json query_to_json(const Query& q) {
  return json{{"initial", configuration_to_json(q.initial)},
              {"final", configuration_to_json(q.final_state)}};
}

Query query_from_json(const json& j) {
  if (!j.is_object() || !j.contains("initial") || !j.contains("final")) {
    throw std::invalid_argument("query needs \"initial\" and \"final\" states");
  }
  return Query{configuration_from_json(j["initial"], "initial state"),
               configuration_from_json(j["final"], "final state")};
}

Query parse_query(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("query is not valid JSON: ") + e.what());
  }
  return query_from_json(j);
}

json plan_document(const Plan& p, int trajectory_samples) {
  json stages = json::array();
  json segments = json::array();
  for (int s = 0; s < 5; ++s) {
    stages.push_back(json{{"name", kStageNames[s]},
                          {"segments", p.stages.stage(s).size()},
                          {"arc_length", round_sig12(p.stage_lengths[s])}});
  }
  std::size_t flat = 0;
  for (int s = 0; s < 5; ++s) {
    for (std::size_t k = 0; k < p.stages.stage(s).size(); ++k, ++flat) {
      const PathSegment& seg = p.segments[flat];
      segments.push_back(json{{"stage", kStageNames[s]},
                              {"a", move_to_json(seg.start.a, seg.a)},
                              {"b", move_to_json(seg.start.b, seg.b)},
                              {"duration", round_sig12(seg.duration)}});
    }
  }
  json doc{{"domain", to_string(p.domain)},
           {"query", query_to_json({p.initial, p.final_state})},
           {"initial_node", to_string(p.initial_node)},
           {"final_node", to_string(p.final_node)},
           {"stages", stages},
           {"segments", segments},
           {"total_arc_length", round_sig12(p.total_arc_length)}};
  if (trajectory_samples >= 2) {
    doc["trajectory"] = trajectory_to_json(p, trajectory_samples);
  }
  return doc;
}

void write_trajectory_jsonl(const Plan& p, int samples, std::ostream& out) {
  for (const json& line : trajectory_to_json(p, samples)) {
    out << line.dump() << "\n";
  }
}

namespace {

struct Xy {
  double x;
  double y;
};

constexpr double kRadius = 100.0;
constexpr double kPi = 3.14159265358979323846;

Xy point_xy(const PhysPoint& p) {
  if (p.is_vertex()) return {0.0, 0.0};
  const double theta = kPi / 2.0 + 2.0 * kPi / 3.0 * (to_int(p.circle()) - 1);
  const double cx = kRadius * std::cos(theta);
  const double cy = kRadius * std::sin(theta);
  const double phi = theta + kPi + 2.0 * kPi * p.t();
  // SVG y grows downward; negate to keep counterclockwise visually ccw.
  return {cx + kRadius * std::cos(phi), -(cy + kRadius * std::sin(phi))};
}

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

}  // namespace

std::string render_svg(const Plan& p, int samples) {
  const SampledTrajectory traj = sample(p, std::max(samples, 2));
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"640\" height=\"640\" viewBox=\"-320 -320 640 640\">\n";
  svg << "  <rect x=\"-320\" y=\"-320\" width=\"640\" height=\"640\" fill=\"white\"/>\n";
  for (CircleId c : all_circles()) {
    const double theta = kPi / 2.0 + 2.0 * kPi / 3.0 * (to_int(c) - 1);
    svg << "  <circle cx=\"" << fmt(kRadius * std::cos(theta)) << "\" cy=\""
        << fmt(-kRadius * std::sin(theta)) << "\" r=\"" << fmt(kRadius)
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"2\"/>\n";
    const Xy pole = point_xy(PhysPoint::on_circle(c, 0.5));
    svg << "  <circle cx=\"" << fmt(pole.x) << "\" cy=\"" << fmt(pole.y)
        << "\" r=\"3\" fill=\"#bbbbbb\"/>\n";
  }
  svg << "  <circle cx=\"0\" cy=\"0\" r=\"4\" fill=\"#444444\"/>\n";

  const auto polyline = [&](Robot robot, const char* stroke, const char* dash) {
    svg << "  <polyline fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"3\" stroke-opacity=\"0.75\"" << dash
        << " points=\"";
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
      const PhysPoint& pos =
          robot == Robot::A ? traj.states[i].a : traj.states[i].b;
      const Xy xy = point_xy(pos);
      if (i) svg << ' ';
      svg << fmt(xy.x) << ',' << fmt(xy.y);
    }
    svg << "\"/>\n";
  };
  polyline(Robot::A, "#d62728", "");
  polyline(Robot::B, "#1f77b4", " stroke-dasharray=\"6 4\"");

  const auto marker = [&](const PhysPoint& pos, const char* fill, bool square) {
    const Xy xy = point_xy(pos);
    if (square) {
      svg << "  <rect x=\"" << fmt(xy.x - 5) << "\" y=\"" << fmt(xy.y - 5)
          << "\" width=\"10\" height=\"10\" fill=\"" << fill << "\"/>\n";
    } else {
      svg << "  <circle cx=\"" << fmt(xy.x) << "\" cy=\"" << fmt(xy.y)
          << "\" r=\"5\" fill=\"" << fill << "\"/>\n";
    }
  };
  marker(p.initial.a, "#d62728", false);
  marker(p.final_state.a, "#7f1d1d", true);
  marker(p.initial.b, "#1f77b4", false);
  marker(p.final_state.b, "#1e3a8a", true);
  svg << "</svg>\n";
  return svg.str();
}

json topology_document(const DiscreteComplexSummary& s) {
  return json{{"k", s.subdivision},
              {"V", s.vertex_cells},
              {"E", s.edge_cells},
              {"F", s.square_cells},
              {"chi", s.euler},
              {"connected", s.connected},
              {"b1", s.first_betti},
              {"tc", s.tc}};
}

namespace {

json continuity_to_json(const ContinuityReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"trial", v.trial},
                              {"modulus", round_sig12(v.modulus)},
                              {"locus", v.locus}});
  }
  return json{{"region", to_string(r.region)},
              {"delta", round_sig12(r.delta)},
              {"margin", round_sig12(r.margin)},
              {"trials", r.trials},
              {"max_modulus", round_sig12(r.max_modulus)},
              {"violations", violations}};
}

}  // namespace

json verify_document(const SuiteReport& validity,
                     const std::vector<ContinuityReport>& continuity,
                     const ContinuityReport& loci) {
  json failures = json::array();
  for (const auto& f : validity.failures) {
    failures.push_back(
        json{{"trial", f.trial}, {"check", f.check}, {"detail", f.detail}});
  }
  json continuity_json = json::array();
  bool continuity_ok = true;
  for (const auto& r : continuity) {
    continuity_json.push_back(continuity_to_json(r));
    continuity_ok = continuity_ok && r.violations.empty();
  }
  const bool ok = validity.failures.empty() && continuity_ok;
  return json{{"ok", ok},
              {"trials", validity.trials},
              {"seed", validity.seed},
              {"validity",
               json{{"failures", failures},
                    {"max_endpoint_error", round_sig12(validity.max_endpoint_error)},
                    {"max_total_length", round_sig12(validity.max_total_length)},
                    {"max_zigzag_length", round_sig12(validity.max_zigzag_length)}}},
              {"continuity", continuity_json},
              {"vertex_crossing_loci", continuity_to_json(loci)}};
}

namespace {

std::optional<double> env_double(const char* name) {
  const char* value = std::getenv(name);
  if (!value || !*value) return std::nullopt;
  char* end = nullptr;
  const double parsed = std::strtod(value, &end);
  if (end == value || *end != '\0') return std::nullopt;
  return parsed;
}

double resolve_rho(const std::optional<double>& flag) {
  if (flag) return *flag;
  if (const auto env = env_double("WEDGE_RHO")) return *env;
  return kSnapTolerance;
}

int resolve_samples(int flag) {
  if (flag > 0) return flag;
  if (const auto env = env_double("WEDGE_SAMPLES")) {
    return static_cast<int>(*env);
  }
  return 0;
}

std::string read_query_text(const std::string& file, const std::string& inline_spec) {
  if (!inline_spec.empty()) return inline_spec;
  if (file.empty()) {
    throw std::invalid_argument("a query is required (--query FILE or --inline SPEC)");
  }
  std::ifstream in(file);
  if (!in) {
    throw std::invalid_argument("cannot open query file: " + file);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int cmd_plan(const PlanCommandOptions& options, std::ostream& out,
             std::ostream& err) {
  try {
    const Query query = parse_query(
        read_query_text(options.query_file, options.inline_spec));
    const double rho = resolve_rho(options.rho);
    const Plan result = plan(query.initial, query.final_state, rho);
    const int samples = resolve_samples(options.samples);
    out << plan_document(result, samples).dump(2) << "\n";
    if (!options.trajectory_path.empty()) {
      std::ofstream file(options.trajectory_path);
      if (!file) {
        err << "error: cannot write " << options.trajectory_path << "\n";
        return 2;
      }
      write_trajectory_jsonl(result, samples >= 2 ? samples : 101, file);
    }
    if (!options.svg_path.empty()) {
      std::ofstream file(options.svg_path);
      if (!file) {
        err << "error: cannot write " << options.svg_path << "\n";
        return 2;
      }
      file << render_svg(result);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_topology(int k, std::ostream& out, std::ostream& err) {
  try {
    const DiscreteComplexSummary summary = build_complex(subdivided_wedge(k), k);
    out << topology_document(summary).dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_domain(const DomainCommandOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    const Query query = parse_query(
        read_query_text(options.query_file, options.inline_spec));
    const double rho = resolve_rho(options.rho);
    out << to_string(classify_domain(query.initial, query.final_state, rho))
        << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const VerifyCommandOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    if (!options.inject_fault.empty() &&
        options.inject_fault != "skip-from-node") {
      throw std::invalid_argument("unknown fault: " + options.inject_fault);
    }
    SuiteOptions suite;
    suite.trials = options.trials;
    suite.seed = options.seed;
    suite.parallel = options.parallel;
    suite.inject_skip_from_node = options.inject_fault == "skip-from-node";
    const SuiteReport validity = run_validity_suite(suite);

    std::vector<ContinuityReport> continuity;
    for (DomainTag region : {DomainTag::U, DomainTag::V, DomainTag::W}) {
      ContinuityOptions c;
      c.region = region;
      c.trials = options.continuity_trials;
      c.seed = options.seed;
      c.parallel = options.parallel;
      continuity.push_back(continuity_probe(c));
    }
    ContinuityOptions straddle;
    straddle.margin = 0.0;  // report the vertex-crossing loci
    straddle.trials = std::min(options.continuity_trials, 24);
    straddle.seed = options.seed;
    straddle.parallel = options.parallel;
    const ContinuityReport loci = continuity_probe(straddle);

    const json doc = verify_document(validity, continuity, loci);
    out << doc.dump(2) << "\n";
    return doc["ok"].get<bool>() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wedge::io
