// cliffordsys command-line front end. Exit status: 0 when every check
// passes, 1 when a check fails, 2 for unusable input.

#include <fstream>
#include <random>
#include <iostream>

#include "CLI11.hpp"
#include "cliffordsys/audit.hpp"
#include "cliffordsys/em_order.hpp"
#include "cliffordsys/error.hpp"
#include "cliffordsys/obstruction.hpp"
#include "json.hpp"

using namespace cliffordsys;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kBadInput = 2;

json vec_json(const Vec& v) {
  json out = json::array();
  for (Elem x : v) out.push_back(std::to_string(x));
  return out;
}

json longs_json(const std::vector<long>& v) {
  json out = json::array();
  for (long x : v) out.push_back(std::to_string(x));
  return out;
}

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

int emit(const json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  return ok ? kPass : kFail;
}

int cmd_cohomology(const SpecFile& spec, int degree) {
  auto type = spec.type();
  auto h = Cohomology::compute(type->module(), degree);
  json j{{"group", type->group().name()}, {"ring", type->ring().name()}, {"degree", std::to_string(degree)},
         {"factors", longs_json(h.factors())}};
  if (spec.has("cocycle")) {
    auto z = spec.cocycle();
    auto check = is_cocycle(z);
    j["class"] = check.ok ? json(longs_json(h.class_of(z))) : json(nullptr);
    if (!check.ok) j["witness"] = tuple_str(check.witness);
    return emit(j, check.ok);
  }
  return emit(j, true);
}

int cmd_crossed(const SpecFile& spec) {
  auto a = spec.crossed();
  auto rep = verify_strongly_graded(*a.ambient(), a.group(), a.grading());
  const bool cs = is_central_simple(*a.ambient());
  json j{{"base", a.base()->name()},
         {"group", a.group().name()},
         {"ambient_rank", std::to_string(a.ambient()->rank())},
         {"over", a.ambient()->ring()->name()},
         {"strong", rep.strong},
         {"crossed", rep.crossed},
         {"central_simple", cs}};
  if (a.base()->rank() == 1) {
    auto alpha = cocycle_of(a);
    auto h = Cohomology::compute(a.type()->module(), 2);
    j["class"] = longs_json(h.class_of(alpha));
  }
  return emit(j, rep.strong && rep.crossed);
}

int cmd_graded(const SpecFile& spec) {
  auto a = spec.algebra();
  auto g = spec.group();
  auto rep = verify_strongly_graded(*a, g, spec.grading());
  json j{{"algebra", a->name()}, {"group", g.name()}, {"strong", rep.strong}, {"crossed", rep.crossed}};
  if (rep.span_failure)
    j["witness"] = "(" + std::to_string(rep.span_failure->first) + "," + std::to_string(rep.span_failure->second) + ")";
  if (rep.certified_component) {
    j["unit_free_component"] = std::to_string(*rep.certified_component);
    j["certificate"] = {{"dim_u", std::to_string(rep.certificate_dim_u)},
                        {"dim_w", std::to_string(rep.certificate_dim_w)}};
  }
  return emit(j, true);
}

json class_json(const ObstructionClass& cls) {
  return {{"factors", longs_json(cls.factors)}, {"class", longs_json(cls.coords)}, {"zero", cls.is_zero()}};
}

int cmd_character(const SpecFile& spec) {
  auto phi = spec.character();
  json inner = json::array();
  for (int g = 0; g < phi.group().order(); ++g) {
    auto u = is_inner(*phi.algebra(), phi.eta(g));
    inner.push_back(u ? vec_json(*u) : json(nullptr));
  }
  json j{{"algebra", phi.algebra()->name()}, {"group", phi.group().name()}, {"inner_units", inner}};
  j["obstruction"] = class_json(obstruction_class(phi));
  return emit(j, true);
}

int cmd_obstruction(const SpecFile& spec) {
  auto phi = spec.character();
  auto cls = obstruction_class(phi);
  return emit({{"algebra", phi.algebra()->name()}, {"obstruction", class_json(cls)}}, true);
}

int cmd_realize(const SpecFile& spec) {
  auto phi = spec.character();
  auto cls = obstruction_class(phi);
  auto r = realize(phi);
  json j{{"algebra", phi.algebra()->name()}, {"obstruction", class_json(cls)}, {"realized", r.has_value()}};
  bool ok = cls.is_zero() == r.has_value();
  if (r) {
    json f = json::object();
    for (int g = 0; g < r->group().order(); ++g)
      for (int h = 0; h < r->group().order(); ++h)
        f["(" + std::to_string(g) + "," + std::to_string(h) + ")"] = vec_json(r->f(g, h));
    j["factor_set"] = f;
    const bool same = characters_equal(chi(*r), phi);
    j["same_character"] = same;
    ok = ok && same;
  }
  return emit(j, ok);
}

int cmd_galois(const std::optional<GaloisParams>& params) {
  auto s = galois_setup(params->p, params->poly, params->n);
  json checks = json::array();
  bool ok = true;
  for (const auto& c : brauer_desk_audit(s, 1)) {
    checks.push_back({{"name", c.name}, {"verdict", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    ok = ok && c.pass;
  }
  return emit({{"field", s.field->name()}, {"q", std::to_string(s.q)}, {"n", std::to_string(s.n)}, {"checks", checks}},
              ok);
}

HElement random_h(std::mt19937_64& rng) {
  HElement a{{}, static_cast<long>(rng() % 7) - 3};
  for (int k = 0, m = static_cast<int>(rng() % 4); k < m; ++k)
    a = h_mul(a, HElement::p(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 5) - 2));
  return a;
}

int cmd_emorder(std::uint64_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t failures = 0;
  std::string witness;
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto a = random_h(rng), b = random_h(rng), c = random_h(rng);
    const auto ab = h_cmp(a, b);
    bool ok = (ab == 0) == (a == b) && h_cmp(b, a) == (0 <=> ab);
    ok = ok && h_cmp(h_mul(c, a), h_mul(c, b)) == ab && h_cmp(h_mul(a, c), h_mul(b, c)) == ab;
    if (ab < 0 && h_cmp(b, c) < 0) ok = ok && h_cmp(a, c) < 0;
    if (!ok && ++failures == 1) witness = a.to_string() + " vs " + b.to_string() + " with " + c.to_string();
  }
  json j{{"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}, {"failures", std::to_string(failures)}};
  if (failures) j["witness"] = witness;
  return emit(j, failures == 0);
}

int cmd_audit(const SpecFile& spec, std::uint64_t seed, std::optional<std::uint64_t> trials,
              std::optional<std::uint64_t> budget, const std::string& inject, const std::string& json_path) {
  auto cfg = AuditConfig::from_spec(spec);
  cfg.seed = seed;
  if (trials) cfg.trials = *trials;
  if (budget) cfg.search_budget = *budget;
  cfg.inject = inject;
  cfg.validate();
  auto report = run_sequence_audit(cfg);
  for (const auto& b : report.batteries) {
    std::cout << (b.pass() ? "PASS " : "FAIL ") << b.name << "  [" << b.claim << "]\n";
    for (const auto& c : b.checks)
      if (!c.pass) std::cout << "  fail: " << c.name << " at " << c.witness << " (" << c.detail << ")\n";
  }
  std::cout << (report.pass() ? "audit passed" : "audit failed") << "\n";
  if (!json_path.empty()) {
    const auto text = report_to_json(report).dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(json_path);
      if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write report", json_path);
      out << text;
    }
  }
  return report.pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with crossed products, collective characters and obstruction classes"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string spec_path, json_path, inject;
  std::uint64_t seed = 1, em_trials = 10000;
  std::optional<std::uint64_t> trials, budget;
  int degree = 2;
  long q = 0;
  int n = 0;

  auto add_spec = [&](CLI::App* c) { c->add_option("--spec", spec_path, "spec file")->required(); };
  auto* coh = app.add_subcommand("cohomology", "H^n(G, K^*_phi) of the spec's type");
  add_spec(coh);
  coh->add_option("--degree", degree, "1, 2 or 3")->check(CLI::Range(1, 3));
  auto* crossed = app.add_subcommand("crossed", "build the [crossed] section and verify its grading");
  add_spec(crossed);
  auto* graded = app.add_subcommand("graded", "strong-grading check of [algebra] with [grading]");
  add_spec(graded);
  auto* character = app.add_subcommand("character", "inner units and obstruction of [character]");
  add_spec(character);
  auto* obstruction = app.add_subcommand("obstruction", "obstruction class of [character]");
  add_spec(obstruction);
  auto* realize_cmd = app.add_subcommand("realize", "crossed product realizing [character], if any");
  add_spec(realize_cmd);
  auto* galois = app.add_subcommand("galois", "finite-field Galois desk audit");
  galois->add_option("--spec", spec_path, "spec file with a [galois] section");
  galois->add_option("--q", q, "order of k");
  galois->add_option("--n", n, "degree [K:k]");
  auto* emorder = app.add_subcommand("emorder", "random property trials of the bi-invariant order");
  emorder->add_option("--trials", em_trials, "number of trials");
  emorder->add_option("--seed", seed, "random seed");
  auto* audit = app.add_subcommand("audit", "run the audit batteries");
  add_spec(audit);
  audit->add_option("--seed", seed, "root seed");
  audit->add_option("--trials", trials, "trials per battery");
  audit->add_option("--budget", budget, "nonzero-search budget");
  audit->add_option("--inject", inject, "plant a fault in a battery: sigma or kerchi");
  audit->add_option("--json", json_path, "write the JSON report to a path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kBadInput;
  }

  try {
    if (emorder->parsed()) return cmd_emorder(em_trials, seed);
    if (galois->parsed()) {
      std::optional<GaloisParams> params;
      if (!spec_path.empty()) {
        auto spec = SpecFile::load(spec_path);
        params = AuditConfig::from_spec(spec).galois;
        if (!params) throw Error(ErrorKind::ParseError, "expected a [galois] section", "1");
      } else {
        params = default_galois_params(q, n);
        if (!params) throw Error(ErrorKind::InvalidArgument, "no built-in polynomial for this (q, n)");
      }
      return cmd_galois(params);
    }
    auto spec = SpecFile::load(spec_path);
    if (coh->parsed()) return cmd_cohomology(spec, degree);
    if (crossed->parsed()) return cmd_crossed(spec);
    if (graded->parsed()) return cmd_graded(spec);
    if (character->parsed()) return cmd_character(spec);
    if (obstruction->parsed()) return cmd_obstruction(spec);
    if (realize_cmd->parsed()) return cmd_realize(spec);
    return cmd_audit(spec, seed, trials, budget, inject, json_path);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what();
    if (!e.witness().empty()) std::cerr << " (witness " << e.witness() << ")";
    std::cerr << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kBadInput;
  }
}
