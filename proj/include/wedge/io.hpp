#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "wedge/discrete_complex.hpp"
#include "wedge/planner.hpp"
#include "wedge/probes.hpp"

namespace wedge::io {

/// All numbers in emitted documents are rounded to 12 significant digits.
double round_sig12(double x);

nlohmann::json position_to_json(const PhysPoint& p);
PhysPoint position_from_json(const nlohmann::json& j);

struct Query {
  Configuration initial;
  Configuration final_state;
};

nlohmann::json query_to_json(const Query& q);
Query query_from_json(const nlohmann::json& j);
Query parse_query(const std::string& text);

/// The plan wire format: domain tag, query echo, per-stage summary, flat
/// segment list, and optionally a sampled trajectory.
nlohmann::json plan_document(const Plan& p, int trajectory_samples = 0);

/// One JSONL line {"time": t, "A": pos, "B": pos} per sample.
void write_trajectory_jsonl(const Plan& p, int samples, std::ostream& out);

/// Static rendering of the track with both robots' traces.
std::string render_svg(const Plan& p, int samples = 256);

nlohmann::json topology_document(const DiscreteComplexSummary& s);
nlohmann::json verify_document(const SuiteReport& validity,
                               const std::vector<ContinuityReport>& continuity,
                               const ContinuityReport& loci);

// Command layer (exit codes: 0 success, 1 invariant failure, 2 input error).

struct PlanCommandOptions {
  std::string query_file;    // one of query_file / inline_spec is required
  std::string inline_spec;
  int samples = 0;           // <= 0: resolve from WEDGE_SAMPLES, else none
  std::string svg_path;
  std::string trajectory_path;
  std::optional<double> rho;  // unset: WEDGE_RHO or the built-in default
};

int cmd_plan(const PlanCommandOptions& options, std::ostream& out,
             std::ostream& err);

int cmd_topology(int k, std::ostream& out, std::ostream& err);

struct DomainCommandOptions {
  std::string query_file;
  std::string inline_spec;
  std::optional<double> rho;
};

int cmd_domain(const DomainCommandOptions& options, std::ostream& out,
               std::ostream& err);

struct VerifyCommandOptions {
  int trials = 1000;
  std::uint64_t seed = 7;
  int continuity_trials = 200;
  std::string inject_fault;  // "", or "skip-from-node"
  bool parallel = true;
};

int cmd_verify(const VerifyCommandOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace wedge::io
