#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "extremal/bounds.hpp"
#include "extremal/family.hpp"
#include "extremal/replicate.hpp"

using namespace extremal::cli;

namespace {

void construct_flags(CLI::App* cmd, ConstructArgs& a) {
  cmd->add_option("--family", a.family, "star | h | j | e | t2s | f2s")
      ->required()
      ->check(CLI::IsMember({"star", "h", "j", "e", "t2s", "f2s"}));
  cmd->add_option("--n", a.n, "ground set size");
  cmd->add_option("--k", a.k, "uniformity");
  cmd->add_option("--u", a.u, "H_u parameter");
  cmd->add_option("--i", a.i, "J_i parameter");
  cmd->add_option("--l", a.l, "E_l parameter");
  cmd->add_option("--s", a.s, "T_2^s / F_2^s parameter");
  cmd->add_option("--m", a.m, "ground set size for t2s / f2s");
  cmd->add_option("--center", a.center, "center of the full star")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersecting-family constructions, bounds and small-instance verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", EXTREMAL_VERSION);

  ConstructArgs construct, size;
  auto* c_construct = app.add_subcommand("construct", "Build a named family and write it as JSON");
  construct_flags(c_construct, construct);
  c_construct->add_option("--out", construct.out, "output path (default: stdout)");

  auto* c_size = app.add_subcommand("size", "Closed-form size of a named family");
  construct_flags(c_size, size);

  BoundArgs bound;
  auto* c_bound = app.add_subcommand("bound", "Evaluate a bound");
  c_bound->add_option("--name", bound.name, "hm | kz | hk | cross-easy | cross-j | f2s | fz | kk")
      ->required()
      ->check(CLI::IsMember({"hm", "kz", "hk", "cross-easy", "cross-j", "f2s", "fz", "kk"}));
  c_bound->add_option("--n", bound.n);
  c_bound->add_option("--k", bound.k);
  c_bound->add_option("--u", bound.u, "may be real for kz");
  c_bound->add_option("--m", bound.m);
  c_bound->add_option("--s", bound.s);
  c_bound->add_option("--z", bound.z);
  c_bound->add_option("--a", bound.a);
  c_bound->add_option("--b", bound.b);
  c_bound->add_option("--j", bound.j);
  c_bound->add_option("--r", bound.r, "uniformity for kk");
  c_bound->add_option("--size", bound.size, "family size for kk");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Check a theorem on small instances");
  c_verify->add_option("--theorem", verify.theorem)
      ->required()
      ->check(CLI::IsMember({"ekr", "thm1", "hk", "thm4p1", "thm4p2", "cor5", "lemma7", "cross"}));
  c_verify->add_option("--n", verify.n);
  c_verify->add_option("--k", verify.k);
  c_verify->add_option("--u", verify.u);
  c_verify->add_option("--t", verify.t)->capture_default_str();
  c_verify->add_option("--m", verify.m);
  c_verify->add_option("--s", verify.s);
  c_verify->add_option("--a", verify.a);
  c_verify->add_option("--b", verify.b);
  c_verify->add_option("--samples", verify.samples, "sample count (sampled instead of exhaustive)");
  c_verify->add_option("--seed", verify.seed, "required for randomized runs");
  c_verify->add_option("--budget-ms", verify.budget_ms, "0 = unlimited")->capture_default_str();
  c_verify->add_option("--budget-nodes", verify.budget_nodes, "0 = unlimited")->capture_default_str();
  c_verify->add_option("--threads", verify.threads)->capture_default_str();
  c_verify->add_option("--family", verify.family_path, "family JSON (thm4p1 single instance)");
  c_verify->add_option("--msub", verify.msub_path, "subfamily M JSON (thm4p1 single instance)");
  c_verify->add_option("--report", verify.report, "report JSON path (default: stdout)");
  c_verify->add_option("--csv", verify.csv, "CSV summary path");

  EnumerateArgs enumerate;
  auto* c_enum = app.add_subcommand("enumerate", "List maximal intersecting families as JSON lines");
  c_enum->add_option("--n", enumerate.n)->required();
  c_enum->add_option("--k", enumerate.k)->required();
  c_enum->add_option("--min-size", enumerate.min_size);
  c_enum->add_flag("--dedup", enumerate.dedup, "one family per isomorphism class");
  c_enum->add_option("--pivot", enumerate.pivot)->check(CLI::IsMember({"max-degree", "first"}));
  c_enum->add_option("--budget-ms", enumerate.budget_ms, "0 = unlimited");
  c_enum->add_option("--budget-nodes", enumerate.budget_nodes, "0 = unlimited");
  c_enum->add_option("--max-families", enumerate.max_families, "0 = unlimited");
  c_enum->add_option("--threads", enumerate.threads);
  c_enum->add_option("--out", enumerate.out, "output path (default: stdout)");

  ReplicateArgs replicate;
  auto* c_rep = app.add_subcommand("replicate", "Run a named verification suite");
  c_rep->add_option("--suite", replicate.suite)->required()->check(CLI::IsMember(extremal::replicate_suites()));
  c_rep->add_option("--seed", replicate.seed, "required for the cross suite");
  c_rep->add_option("--budget-ms", replicate.budget_ms)->capture_default_str();
  c_rep->add_option("--budget-nodes", replicate.budget_nodes)->capture_default_str();
  c_rep->add_option("--samples", replicate.samples)->capture_default_str();
  c_rep->add_option("--threads", replicate.threads)->capture_default_str();
  c_rep->add_option("--report", replicate.report, "report JSON path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  RunManifest manifest = start_manifest(argc, argv);
  try {
    if (*c_construct) return cmd_construct(construct, manifest);
    if (*c_size) return cmd_size(size);
    if (*c_bound) return cmd_bound(bound);
    if (*c_verify) return cmd_verify(verify, manifest);
    if (*c_enum) return cmd_enumerate(enumerate, manifest);
    if (*c_rep) return cmd_replicate(replicate, manifest);
  } catch (const std::invalid_argument& e) {  // FamilyError and usage errors
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {  // RegimeError and regime checks
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return kUsageError;
}
