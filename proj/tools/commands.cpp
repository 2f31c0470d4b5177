#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <stdexcept>

#include "extremal/bounds.hpp"
#include "extremal/constructions.hpp"
#include "extremal/enumeration.hpp"
#include "extremal/replicate.hpp"
#include "extremal/verification.hpp"

namespace extremal::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json exact(const ExactCount& c) {
  // Small values stay JSON numbers; huge ones become strings.
  if (c >= 0 && c <= ExactCount(std::numeric_limits<std::int64_t>::max())) return Json(to_int64(c));
  return Json(c.str());
}

// Writes the report (with manifest) to `path`, or to stdout when empty.
void emit_report(Json j, RunManifest& manifest, const std::string& path, const std::string& summary) {
  manifest.finish();
  j["manifest"] = manifest.to_json();
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    std::cerr << summary << '\n';
  } else {
    write_text(path, j.dump(2) + "\n");
    std::cout << summary << '\n';
  }
}

std::string summarize(const VerificationReport& r) {
  std::string s = r.theorem + ": " + to_string(r.status);
  if (r.counterexample_count) s += " (" + std::to_string(r.counterexample_count) + " counterexamples)";
  if (r.stats.contains("families_examined"))
    s += ", " + r.stats["families_examined"].dump() + " families examined";
  return s;
}

Family build(const ConstructArgs& a) {
  const Params p{a.n, a.k};
  if (a.family == "star") return full_star(p, a.center);
  if (a.family == "h") return h_u(p, a.u);
  if (a.family == "j") return j_i(p, a.i);
  if (a.family == "e") return e_l(p, a.l);
  if (a.family == "t2s") return t2s(a.m, a.s);
  if (a.family == "f2s") return f2s(a.m, a.k, a.s);
  throw UsageError("unknown family: " + a.family);
}

}  // namespace

int cmd_construct(const ConstructArgs& a, RunManifest& manifest) {
  const Family f = build(a);
  const std::string text = write_family(f);
  if (a.out.empty()) {
    std::cout << text;
    std::cerr << a.family << ": " << f.size() << " sets\n";
  } else {
    write_text(a.out, text);
    manifest.add_output(a.out);
    std::cout << a.family << ": " << f.size() << " sets written to " << a.out << '\n';
  }
  return 0;
}

int cmd_size(const ConstructArgs& a) {
  ExactCount v;
  if (a.family == "star") v = size_full_star(a.n, a.k);
  else if (a.family == "h") v = size_h_u(a.n, a.k, a.u);
  else if (a.family == "j") v = size_j_i(a.n, a.k, a.i);
  else if (a.family == "e") v = size_e_l(a.n, a.k, a.l);
  else if (a.family == "t2s") v = t2s(a.m, a.s).size();
  else if (a.family == "f2s") v = f2s_size(a.m, a.k, a.s);
  else throw UsageError("unknown family: " + a.family);
  Json j;
  j["family"] = a.family;
  j["size"] = exact(v);
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_bound(const BoundArgs& a) {
  Json j;
  auto real = [&](const RealBound& b) {
    j["value"] = b.value;
    j["tolerance"] = b.tolerance;
  };
  if (a.name == "hm") {
    j["value"] = exact(hm_bound(a.n, a.k));
  } else if (a.name == "hk") {
    j["value"] = exact(hk_bound(a.n, a.k));
  } else if (a.name == "kz") {
    require(a.u.has_value(), "bound kz needs --u");
    if (std::floor(*a.u) == *a.u) {
      j["value"] = exact(kz_bound_exact(a.n, a.k, static_cast<int>(*a.u)));
      j["diversity_threshold"] = exact(kz_diversity_threshold_exact(a.n, a.k, static_cast<int>(*a.u)));
    } else {
      real(kz_bound(a.n, a.k, *a.u));
      j["diversity_threshold"] = kz_diversity_threshold(a.n, a.k, *a.u).value;
    }
  } else if (a.name == "cross-easy") {
    j["value"] = exact(cross_easy_bound(a.n, a.a, a.b));
  } else if (a.name == "cross-j") {
    j["value"] = exact(cross_j_bound(a.n, a.a, a.b, a.j));
    j["threshold"] = exact(cross_j_threshold(a.n, a.b, a.j));
  } else if (a.name == "f2s") {
    j["value"] = exact(f2s_size(a.m, a.k, a.s));
  } else if (a.name == "fz") {
    j["value"] = exact(f_of_z(a.m, a.k, a.s, a.z));
  } else if (a.name == "kk") {
    require(!a.size.empty(), "bound kk needs --size");
    const ExactCount size(a.size);
    const RealBound x = kk_threshold_x(size, a.r);
    j["x"] = x.value;
    real(kk_shadow_lb(size, a.r));
  } else {
    throw UsageError("unknown bound: " + a.name);
  }
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_verify(const VerifyArgs& a, RunManifest& manifest) {
  manifest.seed = a.seed;
  VerificationReport r;
  const Params p{a.n, a.k};
  if (a.theorem == "lemma7") {
    r = verify_lemma7(a.m, a.s, a.k);
  } else if (a.theorem == "cross") {
    require(a.seed.has_value(), "verify cross needs --seed");
    r = verify_cross(a.n, a.a, a.b, a.samples.value_or(10000), *a.seed);
  } else if (a.theorem == "thm4p1" && !a.family_path.empty()) {
    require(!a.msub_path.empty(), "verify thm4p1 --family needs --msub");
    const Family f = load_family(a.family_path);
    const Family m = load_family(a.msub_path);
    manifest.add_input(a.family_path);
    manifest.add_input(a.msub_path);
    r = verify_thm4_part1(f, m);
  } else {
    std::unique_ptr<TheoremCheck> check;
    if (a.theorem == "ekr") check = make_ekr_check(p);
    else if (a.theorem == "thm1") check = make_thm1_check(p, a.u);
    else if (a.theorem == "hk") check = make_hk_check(p);
    else if (a.theorem == "thm4p2") check = make_thm4_part2_check(p, a.t);
    else if (a.theorem == "thm4p1") check = std::make_unique<Thm4Part1Check>(p, a.t);
    else if (a.theorem == "cor5") check = make_cor5_check(p);
    else throw UsageError("unknown theorem: " + a.theorem);
    if (a.samples) {
      require(a.seed.has_value(), "sampled runs need --seed");
      r = run_sampled(*check, p, *a.samples, *a.seed);
    } else {
      EnumOptions options;
      options.threads = a.threads;
      r = run_exhaustive(*check, p, EnumBudget{0, a.budget_ms, a.budget_nodes, 0}, options);
    }
  }
  if (!a.csv.empty()) {
    write_text(a.csv, VerificationReport::csv_header() + "\n" + r.csv_row() + "\n");
    manifest.add_output(a.csv);
  }
  emit_report(r.to_json(), manifest, a.report, summarize(r));
  return exit_code(r.status);
}

int cmd_enumerate(const EnumerateArgs& a, RunManifest& manifest) {
  EnumOptions options;
  options.min_size = a.min_size;
  options.dedup_isomorphic = a.dedup;
  options.threads = a.threads;
  if (a.pivot == "first") options.pivot = PivotRule::First;
  else require(a.pivot == "max-degree", "--pivot must be max-degree or first");

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + a.out);
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  const EnumOutcome outcome = enumerate_maximal_intersecting(
      {a.n, a.k}, EnumBudget{a.max_families, a.budget_ms, a.budget_nodes, 0}, options, [&](const Family& f) {
        out << write_family(f);
        return true;
      });
  file.close();
  if (!a.out.empty()) manifest.add_output(a.out);
  std::ostream& log = a.out.empty() ? std::cerr : std::cout;
  log << outcome.emitted << " maximal intersecting families, " << outcome.nodes << " search nodes";
  if (outcome.status == EnumStatus::Inconclusive) log << ", stopped early (" << outcome.stop_reason << ")";
  log << '\n';
  return outcome.status == EnumStatus::Complete ? 0 : 2;
}

int cmd_replicate(const ReplicateArgs& a, RunManifest& manifest) {
  ReplicateOptions o;
  if (a.suite == "cross") require(a.seed.has_value(), "replicate cross needs --seed");
  if (a.seed) o.seed = *a.seed;
  manifest.seed = a.seed;
  o.budget = EnumBudget{0, a.budget_ms, a.budget_nodes, 0};
  o.cross_samples = a.samples;
  o.threads = a.threads;
  const AggregateReport agg = replicate(a.suite, o);
  std::string summary = "replicate " + a.suite + ": " + to_string(agg.status);
  for (const auto& r : agg.items) summary += "\n  " + summarize(r);
  emit_report(agg.to_json(), manifest, a.report, summary);
  return exit_code(agg.status);
}

}  // namespace extremal::cli
