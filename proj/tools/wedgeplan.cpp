// wedgeplan: collision-free motion planning for two robots on a track of
// three circles joined at one point, plus topology verification utilities.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wedge/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Two-robot collision-free motion planner on a three-circle track.\n"
      "Environment defaults: WEDGE_RHO (snap tolerance), WEDGE_SAMPLES\n"
      "(trajectory samples); explicit flags take precedence."};
  app.require_subcommand(1);

  wedge::io::PlanCommandOptions plan_options;
  double plan_rho = -1.0;
  auto* plan_cmd = app.add_subcommand(
      "plan", "Plan a collision-free motion between two states");
  plan_cmd->add_option("--query", plan_options.query_file,
                       "JSON query file with initial and final states");
  plan_cmd->add_option("--inline", plan_options.inline_spec,
                       "Inline JSON query");
  plan_cmd->add_option("--samples", plan_options.samples,
                       "Embed a sampled trajectory with this many points");
  plan_cmd->add_option("--svg", plan_options.svg_path,
                       "Write an SVG rendering of the traces");
  plan_cmd->add_option("--trajectory", plan_options.trajectory_path,
                       "Write the sampled trajectory as JSONL");
  plan_cmd->add_option("--rho", plan_rho, "Classification tolerance");

  int topology_k = 4;
  auto* topology_cmd = app.add_subcommand(
      "topology", "Cell counts and invariants of the discretized state space");
  topology_cmd->add_option("--k", topology_k,
                           "Edges per circle in the subdivision (>= 3)");

  wedge::io::DomainCommandOptions domain_options;
  double domain_rho = -1.0;
  auto* domain_cmd = app.add_subcommand(
      "domain", "Continuity-domain tag (U, V, or W) of a query");
  domain_cmd->add_option("--query", domain_options.query_file, "JSON query file");
  domain_cmd->add_option("--inline", domain_options.inline_spec, "Inline JSON query");
  domain_cmd->add_option("--rho", domain_rho, "Classification tolerance");

  wedge::io::VerifyCommandOptions verify_options;
  bool verify_serial = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Randomized validity and continuity suites");
  verify_cmd->add_option("--trials", verify_options.trials, "Planner trials");
  verify_cmd->add_option("--seed", verify_options.seed, "Base seed");
  verify_cmd->add_option("--continuity-trials", verify_options.continuity_trials,
                         "Trials per continuity region");
  verify_cmd->add_option("--inject-fault", verify_options.inject_fault,
                         "Negative control (skip-from-node)");
  verify_cmd->add_flag("--serial", verify_serial, "Run trials serially");

  CLI11_PARSE(app, argc, argv);

  if (plan_cmd->parsed()) {
    if (plan_rho > 0.0) plan_options.rho = plan_rho;
    return wedge::io::cmd_plan(plan_options, std::cout, std::cerr);
  }
  if (topology_cmd->parsed()) {
    return wedge::io::cmd_topology(topology_k, std::cout, std::cerr);
  }
  if (domain_cmd->parsed()) {
    if (domain_rho > 0.0) domain_options.rho = domain_rho;
    return wedge::io::cmd_domain(domain_options, std::cout, std::cerr);
  }
  if (verify_cmd->parsed()) {
    verify_options.parallel = !verify_serial;
    return wedge::io::cmd_verify(verify_options, std::cout, std::cerr);
  }
  return 2;
}
