#include "cliffordsys/audit.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>

#include "cliffordsys/error.hpp"
#include "cliffordsys/obstruction.hpp"

namespace cliffordsys {

namespace {

using Rng = std::mt19937_64;

std::string describe(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e))
    return std::string(to_string(err->kind())) + ": " + err->what() +
           (err->witness().empty() ? "" : " at " + err->witness());
  return std::string("internal: ") + e.what();
}

Cochain random_cochain(const GModulePtr& m, int degree, Rng& rng) {
  Cochain c(m, degree);
  const auto order = m->module().order();
  for (std::size_t p = 0; p < c.positions(); ++p) c.set_value(p, m->module().element(rng() % order));
  return c;
}

/// Class combination plus a random coboundary.
Cochain random_cocycle(const UnitModulePtr& type, const Cohomology& h2, Rng& rng) {
  Cochain z = coboundary(random_cochain(type->module(), 1, rng));
  for (std::size_t i = 0; i < h2.factors().size(); ++i) {
    const auto reps = rng() % static_cast<std::uint64_t>(h2.factors()[i]);
    for (std::uint64_t r = 0; r < reps; ++r) z = z + h2.representatives()[i];
  }
  return z;
}

Vec random_unit(const Algebra& a, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec v(a.rank());
    for (auto& x : v) x = static_cast<Elem>(rng() % a.ring()->size());
    if (a.is_unit(v)) return v;
  }
  return a.unit();
}

Vec tensor_vec(const Vec& x, const Vec& y, const FiniteCommRing& k) {
  Vec out(x.size() * y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = k.mul(x[i], y[j]);
  return out;
}

/// Accumulates trials of one property into a single check; keeps the first
/// failure's witness.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void record(bool ok, const std::string& witness, const std::string& detail = {}) {
    ++runs_;
    if (!ok && !failed_) {
      failed_ = true;
      witness_ = witness.empty() ? "trial " + std::to_string(runs_ - 1) : witness;
      detail_ = detail;
    }
  }
  void guard(const std::string& witness, const std::function<bool()>& body) {
    try {
      record(body(), witness);
    } catch (const std::exception& e) {
      record(false, witness, describe(e));
    }
  }
  CheckResult result(std::string note = {}) const {
    CheckResult c{name_, !failed_, failed_ ? witness_ : "", {}};
    c.detail = std::to_string(runs_) + " cases";
    if (!note.empty()) c.detail += "; " + note;
    if (failed_ && !detail_.empty()) c.detail += "; " + detail_;
    return c;
  }
  std::uint64_t runs() const { return runs_; }

 private:
  std::string name_;
  std::uint64_t runs_ = 0;
  bool failed_ = false;
  std::string witness_, detail_;
};

struct Context {
  const AuditConfig& cfg;
  AlgebraPtr base;  // K as a rank-one algebra
  Cohomology h2;
};

CollectiveCharacter trivial_character(const Context& ctx) { return CollectiveCharacter::trivial(ctx.base, ctx.cfg.type); }

/// eta_g = iota(u_g) o phi_g on M_2(K) for random units on generators.
std::optional<CollectiveCharacter> matrix_character(const Context& ctx, Rng& rng) {
  const auto& type = ctx.cfg.type;
  auto m2 = Algebra::matrix_algebra(2, ctx.cfg.ring);
  if (type->group().order() * 4 * (type->action().is_trivial() ? 1 : restrict_to_subring(ctx.cfg.ring).degree()) >
      kMaxAlgebraRank)
    return std::nullopt;
  std::vector<AlgebraMap> gens;
  for (int g : type->group().generators())
    gens.push_back(AlgebraMap::inner(m2, random_unit(*m2, rng)).compose(AlgebraMap::coefficientwise(m2, type->action()(g))));
  try {
    return CollectiveCharacter::from_generators(type->group(), m2, gens, type);
  } catch (const Error&) {
    // inner parts that do not satisfy the group relations modulo inner maps
    return CollectiveCharacter::trivial(m2, type);
  }
}

std::vector<CollectiveCharacter> character_pool(const Context& ctx, Rng& rng, std::uint64_t count) {
  std::vector<CollectiveCharacter> pool{trivial_character(ctx)};
  for (std::uint64_t i = 0; pool.size() < count; ++i) {
    if (i % 2 == 0) {
      pool.push_back(chi(sigma_phi(random_cocycle(ctx.cfg.type, ctx.h2, rng), ctx.cfg.type)));
    } else if (auto m = matrix_character(ctx, rng)) {
      pool.push_back(*m);
    } else {
      pool.push_back(trivial_character(ctx));
    }
  }
  return pool;
}

// --- batteries -------------------------------------------------------------

BatteryResult sigma_battery(const Context& ctx, std::uint64_t seed) {
  BatteryResult b{"sigma-injectivity", "K^a G and K^b G are graded-equivalent exactly when [a] = [b] in H^2",
                  seed, ctx.cfg.trials, {}, 0};
  Rng rng(seed);
  const auto& type = ctx.cfg.type;
  const bool inject = ctx.cfg.inject == "sigma";

  // every class when there are at most 8, otherwise a sample
  std::vector<Cochain> reps{Cochain(type->module(), 2)};
  std::uint64_t classes = 1;
  for (long f : ctx.h2.factors()) classes *= static_cast<std::uint64_t>(f);
  if (classes <= 8) {
    for (std::size_t i = 0; i < ctx.h2.factors().size(); ++i) {
      std::vector<Cochain> next;
      for (const auto& r : reps) {
        Cochain c = r;
        for (long m = 0; m < ctx.h2.factors()[i]; ++m) {
          next.push_back(c);
          c = c + ctx.h2.representatives()[i];
        }
      }
      reps = std::move(next);
    }
  } else {
    for (std::uint64_t t = 0; t < 8; ++t) reps.push_back(random_cocycle(type, ctx.h2, rng));
  }

  const std::uint64_t per_class = std::max<std::uint64_t>(1, ctx.cfg.trials / reps.size());
  Tally same("same class gives graded-equivalent algebras");
  Tally distinct("distinct classes give inequivalent algebras");
  Tally paths("solver and algebra comparison agree");
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::uint64_t t = 0; t < per_class; ++t) {
      Cochain a = reps[i] + coboundary(random_cochain(type->module(), 1, rng));
      Cochain c = reps[i] + coboundary(random_cochain(type->module(), 1, rng));
      std::string w = "class " + std::to_string(i) + " trial " + std::to_string(t);
      if (inject && i == 0 && t == 0) {
        // plant a cocycle from another class, or a non-cocycle when H^2 = 0
        if (reps.size() > 1) {
          c = c + reps[1];
        } else {
          Cochain bad(type->module(), 2);
          bad.set_value(0, type->module()->module().element(1));
          c = c + bad;
        }
        w = "planted: class 0 trial 0";
      }
      same.guard(w, [&] { return crossed_equivalent(sigma_phi(a, type), sigma_phi(c, type)).equivalent; });
    }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      Cochain a = reps[i] + coboundary(random_cochain(type->module(), 1, rng));
      Cochain c = reps[j] + coboundary(random_cochain(type->module(), 1, rng));
      const std::string w = "classes (" + std::to_string(i) + "," + std::to_string(j) + ")";
      bool alg = false;
      distinct.guard(w, [&] {
        alg = crossed_equivalent(sigma_phi(a, type), sigma_phi(c, type)).equivalent;
        return !alg || solve_coboundary(a, c).has_value();
      });
      paths.guard(w, [&] { return graded_equivalent_over_K(a, c).equivalent == alg; });
    }
  b.checks = {same.result(std::to_string(reps.size()) + " classes"), distinct.result(), paths.result()};
  return b;
}

BatteryResult kerchi_battery(const Context& ctx, std::uint64_t seed) {
  BatteryResult b{"ker-chi", "over base K, the crossed products with trivial character are exactly the Sigma-image",
                  seed, ctx.cfg.trials, {}, 0};
  Rng rng(seed);
  const auto& type = ctx.cfg.type;
  const auto& K = *ctx.cfg.ring;
  const int n = type->group().order();
  const bool inject = ctx.cfg.inject == "kerchi";

  Tally image("Sigma-image has trivial character");
  for (std::uint64_t t = 0; t < ctx.cfg.trials; ++t)
    image.guard("trial " + std::to_string(t), [&] {
      return characters_equal(chi(sigma_phi(random_cocycle(type, ctx.h2, rng), type)), trivial_character(ctx));
    });

  // normalized factor sets over K: all of them when few, else random ones
  std::vector<Elem> units;
  for (Elem x = 0; x < K.size(); ++x)
    if (K.is_unit(x)) units.push_back(x);
  const std::size_t free = static_cast<std::size_t>((n - 1) * (n - 1));
  long double total = 1;
  for (std::size_t i = 0; i < free; ++i) total *= static_cast<long double>(units.size());
  const bool exhaustive = total <= 4096;
  const std::uint64_t count = exhaustive ? static_cast<std::uint64_t>(total) : ctx.cfg.trials * 8;

  std::vector<AlgebraMap> eta;
  for (int g = 0; g < n; ++g) eta.push_back(AlgebraMap::coefficientwise(ctx.base, type->action()(g)));
  Tally kernel("trivial-character crossed products over K lie in the Sigma-image");
  Tally trivial("crossed products over K have trivial character");
  std::uint64_t valid = 0;
  bool planted = false;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Vec> f(static_cast<std::size_t>(n * n), Vec{K.one()});
    std::uint64_t rest = idx;
    for (int g = 1; g < n; ++g)
      for (int h = 1; h < n; ++h) {
        const std::uint64_t pick = exhaustive ? rest % units.size() : rng() % units.size();
        rest /= units.size();
        f[static_cast<std::size_t>(g * n + h)] = Vec{units[pick]};
      }
    std::optional<CrossedProduct> a;
    try {
      a = CrossedProduct::build(ctx.base, type, eta, f);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotAssociative) continue;  // not a crossed product
      throw;
    }
    ++valid;
    const std::string w = "factor set " + std::to_string(idx);
    trivial.guard(w, [&] { return characters_equal(chi(*a), trivial_character(ctx)); });
    Cochain alpha = cocycle_of(*a);
    std::string wk = w;
    if (inject && !planted) {
      planted = true;
      auto v = alpha.at(std::vector<int>{1, 1});
      v[0] += 1;
      alpha.set(std::vector<int>{1, 1}, type->module()->module().reduce(v));
      wk = "planted: " + w + " alpha(1,1)";
    }
    kernel.guard(wk, [&] { return crossed_equivalent(*a, sigma_phi(alpha, type)).equivalent; });
  }
  const std::string note = std::string(exhaustive ? "exhaustive" : "sampled") + ", " + std::to_string(count) +
                           " factor sets, " + std::to_string(valid) + " associative";
  b.checks = {image.result(), trivial.result(note), kernel.result(note)};
  return b;
}

BatteryResult realize_battery(const Context& ctx, std::uint64_t seed) {
  BatteryResult b{"realizability", "a collective character comes from a crossed product iff its obstruction class is 0",
                  seed, ctx.cfg.trials, {}, 0};
  Rng rng(seed);
  const auto& type = ctx.cfg.type;
  std::vector<CollectiveCharacter> pool = character_pool(ctx, rng, ctx.cfg.trials);
  // characters of twisted skew group algebras over M_2(K)
  if (auto m = matrix_character(ctx, rng)) {
    auto skew = skew_group_algebra(m->algebra(), type);
    for (std::uint64_t t = 0; t < std::max<std::uint64_t>(1, ctx.cfg.trials / 4); ++t)
      pool.push_back(chi(twist(random_cocycle(type, ctx.h2, rng), skew)));
  }
  Tally iff("realize succeeds exactly when the class is zero");
  Tally same("realization has the same character");
  Tally crossed("realization is strongly graded with units");
  Tally cocycle("T is a 3-cocycle with central values");
  std::uint64_t zero = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& phi = pool[i];
    const std::string w = "character " + std::to_string(i) + " over " + phi.algebra()->name();
    std::optional<ObstructionClass> cls;
    cocycle.guard(w, [&] {
      cls = obstruction_class(phi);
      return is_cocycle(cls->T).ok;
    });
    if (!cls) continue;
    std::optional<CrossedProduct> r;
    iff.guard(w, [&] {
      r = realize(phi);
      return cls->is_zero() == r.has_value();
    });
    if (cls->is_zero()) ++zero;
    if (!r) continue;
    same.guard(w, [&] { return characters_equal(chi(*r), phi); });
    crossed.guard(w, [&] {
      auto rep = verify_strongly_graded(*r->ambient(), r->group(), r->grading());
      return rep.strong && rep.crossed;
    });
  }
  b.trials = pool.size();
  b.checks = {cocycle.result(), iff.result(std::to_string(zero) + " with class zero"), same.result(), crossed.result()};
  return b;
}

BatteryResult mult_battery(const Context& ctx, std::uint64_t seed) {
  BatteryResult b{"multiplicativity", "T of a tensor product of characters is the product of the T's", seed,
                  ctx.cfg.trials, {}, 0};
  Rng rng(seed);
  auto pool = character_pool(ctx, rng, 6);
  Tally cochain("T(f (x) f') = T(f) + T(f') as cochains");
  Tally classes("classes add in H^3 coordinates");
  const auto& K = *ctx.cfg.ring;
  for (std::uint64_t t = 0; t < ctx.cfg.trials; ++t) {
    const auto& a = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    if (a.algebra()->rank() * c.algebra()->rank() > 16) continue;
    const std::string w = "pair " + std::to_string(t) + " over " + a.algebra()->name() + " (x) " + c.algebra()->name();
    std::optional<CollectiveCharacter> prod;
    std::optional<ObstructionClass> ta, tc;
    cochain.guard(w, [&] {
      prod = character_product(a, c);
      ta = obstruction_class(a);
      tc = obstruction_class(c);
      std::vector<Vec> f;
      for (std::size_t i = 0; i < a.factor_set().size(); ++i) f.push_back(tensor_vec(a.factor_set()[i], c.factor_set()[i], K));
      return obstruction_class(*prod, f).T == ta->T + tc->T;
    });
    if (!prod || !ta || !tc) continue;
    classes.guard(w, [&] {
      auto tp = obstruction_class(*prod);
      for (std::size_t i = 0; i < tp.coords.size(); ++i)
        if (tp.coords[i] != (ta->coords[i] + tc->coords[i]) % tp.factors[i]) return false;
      return true;
    });
  }
  b.checks = {cochain.result(), classes.result()};
  return b;
}

BatteryResult twist_battery(const Context& ctx, std::uint64_t seed) {
  BatteryResult b{"twist-action", "twisting by a 2-cocycle leaves the character unchanged and acts as a group action",
                  seed, ctx.cfg.trials, {}, 0};
  Rng rng(seed);
  const auto& type = ctx.cfg.type;
  std::vector<CrossedProduct> pool{sigma_phi(random_cocycle(type, ctx.h2, rng), type)};
  if (auto m = matrix_character(ctx, rng)) pool.push_back(skew_group_algebra(m->algebra(), type));
  Tally invariant("chi(twist(a, A)) = chi(A)");
  Tally action("twist(a, twist(b, A)) equivalent to twist(a + b, A)");
  Tally over_k("twist(a, K^b G) = K^(a+b) G");
  for (std::uint64_t t = 0; t < ctx.cfg.trials; ++t) {
    const auto& a = pool[t % pool.size()];
    Cochain alpha = random_cocycle(type, ctx.h2, rng), beta = random_cocycle(type, ctx.h2, rng);
    const std::string w = "trial " + std::to_string(t) + " over " + a.base()->name();
    invariant.guard(w, [&] { return characters_equal(chi(twist(alpha, a)), chi(a)); });
    action.guard(w, [&] { return crossed_equivalent(twist(alpha, twist(beta, a)), twist(alpha + beta, a)).equivalent; });
    if (a.base()->rank() == 1)
      over_k.guard(w, [&] { return cocycle_of(twist(alpha, sigma_phi(beta, type))) == alpha + beta; });
  }
  b.checks = {invariant.result(), action.result(), over_k.result()};
  return b;
}

BatteryResult galois_battery(const Context& ctx, std::uint64_t seed) {
  BatteryResult b{"galois", "finite-field Galois setting: H^2 = 0, K_phi G splits, crossed products are k-central simple",
                  seed, 1, {}, 0};
  const auto& p = *ctx.cfg.galois;
  try {
    auto s = galois_setup(p.p, p.poly, p.n);
    for (auto& c : brauer_desk_audit(s, seed))
      b.checks.push_back({c.name, c.pass, c.pass ? "" : (c.detail.empty() ? c.name : c.detail), c.detail});
  } catch (const std::exception& e) {
    b.checks.push_back({"galois setup", false, describe(e), describe(e)});
  }
  return b;
}

BatteryResult search_battery(const Context& ctx, std::uint64_t seed) {
  BatteryResult b{"nonzero-search", "best-effort search for a character with nonzero obstruction class", seed,
                  ctx.cfg.search_budget, {}, 0};
  auto out = nonzero_obstruction_search(ctx.cfg.ring, ctx.cfg.search_budget, seed);
  b.checks = out.checks;
  return b;
}

}  // namespace

bool BatteryResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool AuditReport::pass() const {
  return std::all_of(batteries.begin(), batteries.end(), [](const BatteryResult& b) { return b.pass(); });
}

AuditConfig AuditConfig::from_spec(const SpecFile& spec) {
  AuditConfig cfg;
  cfg.ring = spec.ring();
  cfg.type = spec.type();
  if (const auto* g = spec.section("galois")) {
    const auto& n = g->require("n");
    GaloisParams params;
    params.n = static_cast<int>(std::stol(n.value));
    if (const auto* p = g->find("p")) {
      params.p = std::stol(p->value);
      params.poly.clear();
      const auto& poly = g->require("poly");
      std::string item;
      for (char c : poly.value + ",") {
        if (c == ',') {
          params.poly.push_back(std::stol(item));
          item.clear();
        } else if (c != ' ') {
          item += c;
        }
      }
    } else {
      auto d = default_galois_params(std::stol(g->require("q").value), params.n);
      if (!d) throw Error(ErrorKind::ParseError, "expected (q, n) from the built-in table", std::to_string(g->line));
      params = *d;
    }
    spec.galois();  // full validation with line numbers
    cfg.galois = params;
  }
  if (const auto* a = spec.section("audit")) {
    auto read = [&](const char* key, std::uint64_t& out) {
      if (const auto* e = a->find(key)) {
        long v = 0;
        try {
          v = std::stol(e->value);
        } catch (const std::exception&) {
          v = -1;
        }
        if (v <= 0)
          throw Error(ErrorKind::ParseError, "line " + std::to_string(e->line) + ": expected a positive integer",
                      std::to_string(e->line));
        out = static_cast<std::uint64_t>(v);
      }
    };
    read("trials", cfg.trials);
    read("search_budget", cfg.search_budget);
  }
  return cfg;
}

void AuditConfig::validate() const {
  if (!ring || !type) throw Error(ErrorKind::InvalidArgument, "audit needs a ring and a type");
  if (!ring->is_field()) throw Error(ErrorKind::InvalidArgument, "audit needs K to be a field", ring->name());
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
  if (search_budget == 0) throw Error(ErrorKind::InvalidArgument, "search budget must be positive");
  if (!inject.empty() && std::find(kInjectableBatteries.begin(), kInjectableBatteries.end(), inject) ==
                             kInjectableBatteries.end())
    throw Error(ErrorKind::InvalidArgument, "unknown injection target; use sigma or kerchi", inject);
}

std::uint64_t derive_seed(std::uint64_t root, const std::string& name) {
  std::uint32_t h = 2166136261u;  // FNV-1a
  for (unsigned char c : name) h = (h ^ c) * 16777619u;
  std::seed_seq seq{static_cast<std::uint32_t>(root), static_cast<std::uint32_t>(root >> 32), h};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

AuditReport run_sequence_audit(const AuditConfig& cfg) {
  cfg.validate();
  Context ctx{cfg, Algebra::base_ring(cfg.ring), Cohomology::compute(cfg.type->module(), 2)};
  using Battery = BatteryResult (*)(const Context&, std::uint64_t);
  std::vector<std::pair<std::string, Battery>> plan{{"sigma-injectivity", sigma_battery},
                                                    {"ker-chi", kerchi_battery},
                                                    {"realizability", realize_battery},
                                                    {"multiplicativity", mult_battery},
                                                    {"twist-action", twist_battery}};
  if (cfg.galois) plan.emplace_back("galois", galois_battery);
  plan.emplace_back("nonzero-search", search_battery);

  std::vector<std::future<BatteryResult>> running;
  for (const auto& [name, fn] : plan) {
    const std::uint64_t seed = derive_seed(cfg.seed, name);
    running.push_back(std::async(std::launch::async, [&ctx, fn, seed, name = name] {
      const auto start = std::chrono::steady_clock::now();
      BatteryResult r;
      try {
        r = fn(ctx, seed);
      } catch (const std::exception& e) {
        r = BatteryResult{name, "battery aborted", seed, 0, {{"battery ran", false, describe(e), describe(e)}}, 0};
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }));
  }
  AuditReport report;
  report.seed = cfg.seed;
  report.setup = "K = " + cfg.ring->name() + ", k = " + std::to_string(cfg.ring->subring().size()) +
                 " elements, G = " + cfg.type->group().name() +
                 (cfg.type->action().is_trivial() ? ", trivial action" : ", nontrivial action") +
                 (cfg.type->action().is_galois() ? " (Galois)" : "");
  for (auto& f : running) report.batteries.push_back(f.get());
  return report;
}

SearchOutcome nonzero_obstruction_search(const RingPtr& k, std::uint64_t budget, std::uint64_t seed) {
  SearchOutcome out;
  Rng rng(seed);
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  std::vector<FiniteGroup> groups{c2, FiniteGroup::direct_product(c2, c2), FiniteGroup::cyclic(4)};
  std::vector<UnitModulePtr> types;
  for (const auto& g : groups) types.push_back(std::make_shared<const UnitModule>(RingAction::trivial(g, k)));

  // K-central algebras: M_2(K), upper triangular T_2(K) and T_2 (x) T_2,
  // whose tensor flip is an automorphism that is not inner
  std::vector<Vec> t2(9, Vec(3, 0));
  t2[0] = {k->one(), 0, 0};
  t2[1] = {0, k->one(), 0};
  t2[5] = {0, k->one(), 0};
  t2[8] = {0, 0, k->one()};
  auto tri = Algebra::from_constants(k, 3, t2, {k->one(), 0, k->one()}, "T_2(" + k->name() + ")");
  auto tri2 = Algebra::tensor(*tri, *tri);
  std::vector<AlgebraPtr> algebras{Algebra::matrix_algebra(2, k), tri, tri2};
  std::vector<Vec> flip_images;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) flip_images.push_back(tri2->basis(j * 3 + i));
  auto flip = AlgebraMap::automorphism(tri2, flip_images);

  std::uint64_t cocycle_failures = 0, realized_nonzero = 0;
  std::string cocycle_witness, realized_witness;
  for (; out.candidates < budget; ++out.candidates) {
    const std::size_t gi = rng() % groups.size();
    const std::size_t ai = rng() % algebras.size();
    const auto& r = algebras[ai];
    std::vector<AlgebraMap> gens;
    std::string words;
    for (std::size_t t = 0; t < groups[gi].generators().size(); ++t) {
      auto m = AlgebraMap::inner(r, random_unit(*r, rng));
      const bool flipped = ai == 2 && rng() % 2 == 0;
      if (flipped) m = flip.compose(m);
      words += flipped ? "f" : "i";
    }
    try {
      gens.clear();
      for (char w : words) {
        auto m = AlgebraMap::inner(r, random_unit(*r, rng));
        gens.push_back(w == 'f' ? flip.compose(m) : m);
      }
      auto phi = CollectiveCharacter::from_generators(groups[gi], r, gens, types[gi]);
      ++out.valid_characters;
      auto cls = obstruction_class(phi);
      if (!cls.is_zero()) {
        ++out.nonzero;
        const std::string w = "candidate " + std::to_string(out.candidates) + ": " + r->name() + ", " +
                              groups[gi].name() + ", words " + words;
        out.nonzero_witnesses.push_back(w);
        if (realize(phi)) {
          ++realized_nonzero;
          if (realized_witness.empty()) realized_witness = w;
        }
      }
    } catch (const Error&) {
      // generator images violating the relations modulo inner maps
    } catch (const InternalError& e) {
      ++cocycle_failures;
      if (cocycle_witness.empty()) cocycle_witness = "candidate " + std::to_string(out.candidates) + ": " + e.what();
    }
  }
  const std::string counts = std::to_string(out.candidates) + " candidates, " + std::to_string(out.valid_characters) +
                             " valid characters, " + std::to_string(out.nonzero) + " nonzero classes";
  out.checks.push_back({"search ran to its budget", out.candidates == budget,
                        out.candidates == budget ? "" : std::to_string(out.candidates), counts});
  out.checks.push_back({"obstruction values central and T a 3-cocycle", cocycle_failures == 0, cocycle_witness,
                        std::to_string(cocycle_failures) + " failures"});
  out.checks.push_back({"nonzero classes are not realized", realized_nonzero == 0, realized_witness,
                        out.nonzero == 0 ? "no nonzero class found (finding one is not required)"
                                         : out.nonzero_witnesses.front()});
  return out;
}

nlohmann::json report_to_json(const AuditReport& report) {
  nlohmann::json j;
  j["tool"] = "cliffordsys";
  j["version"] = report.version;
  j["seed"] = std::to_string(report.seed);
  j["setup"] = report.setup;
  j["status"] = report.pass() ? "pass" : "fail";
  nlohmann::json batteries = nlohmann::json::array();
  nlohmann::json timing = nlohmann::json::object();
  double total = 0;
  for (const auto& b : report.batteries) {
    nlohmann::json jb;
    jb["name"] = b.name;
    jb["claim"] = b.claim;
    jb["seed"] = std::to_string(b.seed);
    jb["trials"] = std::to_string(b.trials);
    jb["status"] = b.pass() ? "pass" : "fail";
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : b.checks) {
      nlohmann::json jc{{"name", c.name}, {"verdict", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
      if (!c.pass) jc["witness"] = c.witness.empty() ? c.name : c.witness;
      checks.push_back(std::move(jc));
    }
    jb["checks"] = std::move(checks);
    batteries.push_back(std::move(jb));
    timing[b.name] = std::to_string(b.seconds);
    total += b.seconds;
  }
  j["batteries"] = std::move(batteries);
  timing["batteries_total"] = std::to_string(total);
  j["timing"] = std::move(timing);
  return j;
}

}  // namespace cliffordsys
