#include "cliffordsys/galois.hpp"

#include <random>

#include "cliffordsys/error.hpp"
#include "cliffordsys/obstruction.hpp"

namespace cliffordsys {

GaloisSetup galois_setup(long p, const Poly& f, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  const long m = static_cast<long>(f.size()) - 1;
  if (m < 1 || m % n != 0)
    throw Error(ErrorKind::InvalidArgument, "polynomial degree must be a multiple of n", std::to_string(m));
  std::uint64_t q = 1;
  for (long i = 0; i < m / n; ++i) q *= static_cast<std::uint64_t>(p);
  auto big = FiniteCommRing::field(p, f);
  auto K = q == static_cast<std::uint64_t>(p) ? big : big->with_subfield_of_order(q);
  GaloisSetup s;
  s.field = K;
  s.q = q;
  s.n = n;
  s.type = std::make_shared<const UnitModule>(RingAction::frobenius(K, q, n));
  if (!s.type->action().is_galois()) throw InternalError("Frobenius action failed the Galois predicate");
  s.scalars = restrict_to_subring(K);
  return s;
}

AlgebraMap split_skew_group_algebra(const GaloisSetup& s) {
  Cochain zero(s.type->module(), 2);
  auto skew = sigma_phi(zero, s.type);
  const auto& S = skew.scalars();
  const auto& K = *s.field;
  const auto n = static_cast<std::size_t>(s.n);
  const std::size_t d = S.degree();
  if (d != n) throw InternalError("degree of K over k differs from |G|");
  auto target = Algebra::matrix_algebra(d, S.small);
  std::vector<Vec> images;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t t = 0; t < d; ++t) {
      Vec m(d * d, 0);
      for (std::size_t col = 0; col < d; ++col) {
        Elem y = K.mul(S.basis[t], s.type->action().apply(static_cast<int>(g), S.basis[col]));
        for (std::size_t row = 0; row < d; ++row) m[row * d + col] = S.coordinate(y, row);
      }
      images.push_back(std::move(m));
    }
  try {
    auto map = AlgebraMap::make(skew.ambient(), target, std::move(images));
    if (!map.is_bijective()) throw InternalError("splitting map is not bijective");
    return map;
  } catch (const Error& e) {
    throw InternalError(std::string("splitting map failed verification: ") + e.what());
  }
}

RestrictionReport restriction_iso_check(const GaloisSetup& s, const CrossedProduct& a) {
  const auto& R = *a.base();
  if (!R.ring()->is_field() || !R.is_K_central() || !is_central_simple(R))
    throw Error(ErrorKind::NotCentralSimpleBase, "base algebra is not K-central simple", R.name());
  if (!same_type(*a.type(), *s.type)) throw Error(ErrorKind::TypeMismatch, "crossed product is not over this setup");
  RestrictionReport rep;
  const auto& amb = *a.ambient();
  rep.center_is_k = amb.center().size() == 1;
  rep.central_simple = is_central_simple(amb);

  const auto& S = a.scalars();
  const int n = a.group().order();
  const std::size_t gsz = static_cast<std::size_t>(n), r = R.rank(), d = S.degree();
  auto source = Algebra::extend_scalars(amb, S);
  auto target = Algebra::tensor(*Algebra::matrix_algebra(gsz, s.field), R);
  rep.dim_source = source->rank();
  rep.dim_target = target->rank();
  rep.dim_expected = gsz * gsz * r;

  std::vector<AlgebraMap> eta_inv;
  for (int g = 0; g < n; ++g) eta_inv.push_back(a.eta(g).inverse());
  std::vector<Vec> images;
  for (int g = 0; g < n; ++g)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t t = 0; t < d; ++t) {
        Vec m(target->rank(), 0);
        Vec left = R.scale(S.basis[t], R.basis(i));
        for (int h = 0; h < n; ++h) {
          const int gh = a.group().mul(g, h);
          Vec entry = eta_inv[static_cast<std::size_t>(gh)](R.mul(left, a.f(g, h)));
          const std::size_t cell = static_cast<std::size_t>(gh) * gsz + static_cast<std::size_t>(h);
          for (std::size_t l = 0; l < r; ++l) m[cell * r + l] = entry[l];
        }
        images.push_back(std::move(m));
      }
  try {
    auto map = AlgebraMap::make(source, target, std::move(images));
    rep.iso_verified = map.is_bijective();
  } catch (const Error&) {
    rep.iso_verified = false;
  }
  return rep;
}

std::vector<std::pair<std::string, CrossedProduct>> galois_roster(const GaloisSetup& s, std::uint64_t seed) {
  std::vector<std::pair<std::string, CrossedProduct>> out;
  Cochain zero(s.type->module(), 2);
  out.emplace_back("skew group algebra", sigma_phi(zero, s.type));

  std::mt19937_64 rng(seed);
  Cochain lambda(s.type->module(), 1);
  const auto& mod = s.type->module()->module();
  for (std::size_t p = 0; p < lambda.positions(); ++p) lambda.set_value(p, mod.element(rng() % mod.order()));
  out.emplace_back("coboundary twist", sigma_phi(coboundary(lambda), s.type));

  const std::size_t rank_m2 = static_cast<std::size_t>(s.n) * 4 * s.scalars.degree();
  if (rank_m2 <= kMaxAlgebraRank) out.emplace_back("M_2(K) coefficientwise", skew_group_algebra(Algebra::matrix_algebra(2, s.field), s.type));
  return out;
}

std::vector<AuditCheck> brauer_desk_audit(const GaloisSetup& s, std::uint64_t seed) {
  std::vector<AuditCheck> checks;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };
  add("galois predicate", s.type->action().is_galois());
  auto h2 = Cohomology::compute(s.type->module(), 2);
  add("H2 vanishes", h2.factors().empty(), h2.factors().empty() ? "" : "nonzero invariant factors");
  try {
    auto split = split_skew_group_algebra(s);
    add("skew group algebra splits", split.is_bijective(),
        "onto " + split.target()->name() + " of rank " + std::to_string(split.target()->rank()));
  } catch (const InternalError& e) {
    add("skew group algebra splits", false, e.what());
  }
  for (const auto& [name, cp] : galois_roster(s, seed)) {
    auto rep = restriction_iso_check(s, cp);
    add(name + ": center is k", rep.center_is_k);
    add(name + ": central simple over k", rep.central_simple);
    add(name + ": restriction isomorphism", rep.iso_verified && rep.dim_source == rep.dim_target &&
                                                rep.dim_target == rep.dim_expected,
        std::to_string(rep.dim_source) + " = " + std::to_string(rep.dim_target) + " = " +
            std::to_string(rep.dim_expected));
    auto graded = verify_strongly_graded(*cp.ambient(), cp.group(), cp.grading());
    add(name + ": strongly graded with units", graded.strong && graded.crossed);
    auto phi = chi(cp);
    auto cls = obstruction_class(phi);
    add(name + ": obstruction class zero", cls.is_zero());
    auto back = realize(phi);
    add(name + ": realization round trip", back && characters_equal(chi(*back), phi));
  }
  return checks;
}

}  // namespace cliffordsys
