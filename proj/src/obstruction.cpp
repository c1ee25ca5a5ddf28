#include "cliffordsys/obstruction.hpp"

#include <algorithm>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

bool ObstructionClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

ObstructionClass obstruction_class(const CollectiveCharacter& phi) { return obstruction_class(phi, phi.factor_set()); }

ObstructionClass obstruction_class(const CollectiveCharacter& phi, const std::vector<Vec>& f) {
  if (!is_factor_set(phi, f)) throw Error(ErrorKind::InvalidArgument, "not a factor set for this character");
  const auto& G = phi.group();
  const auto& R = *phi.algebra();
  const int n = G.order();
  auto fv = [&](int g, int h) -> const Vec& { return f[static_cast<std::size_t>(g * n + h)]; };

  ObstructionClass out{Cochain(phi.type()->module(), 3), {}, {}};
  for (std::size_t p = 0; p < out.T.positions(); ++p) {
    auto t = out.T.tuple(p);
    int s = t[0], u = t[1], c = t[2];
    Vec num = R.mul(fv(s, u), fv(G.mul(s, u), c));
    Vec den = R.mul(phi.eta(s)(fv(u, c)), fv(s, G.mul(u, c)));
    auto inv = R.inverse(den);
    if (!inv) throw InternalError("factor set product is not a unit");
    auto lambda = R.as_scalar(R.mul(num, *inv));
    if (!lambda || !R.ring()->is_unit(*lambda))
      throw InternalError("obstruction value is not a central unit at (" + std::to_string(s) + "," +
                          std::to_string(u) + "," + std::to_string(c) + ")");
    out.T.set_value(p, phi.type()->log(*lambda));
  }
  if (!is_cocycle(out.T).ok) throw InternalError("obstruction cochain is not a 3-cocycle");
  auto h3 = Cohomology::compute(phi.type()->module(), 3);
  out.factors = h3.factors();
  out.coords = h3.class_of(out.T);
  return out;
}

std::optional<CrossedProduct> realize(const CollectiveCharacter& phi) {
  auto cls = obstruction_class(phi);
  if (!cls.is_zero()) return std::nullopt;
  auto c = solve_coboundary(cls.T, Cochain(phi.type()->module(), 3));
  if (!c) throw InternalError("class zero but T is not a coboundary");
  const auto& G = phi.group();
  const auto& R = *phi.algebra();
  const int n = G.order();
  std::vector<Vec> f = phi.factor_set();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Elem s = phi.type()->exp(c->at(std::vector<int>{g, h}));
      auto& v = f[static_cast<std::size_t>(g * n + h)];
      v = R.scale(s, v);
    }
  try {
    return CrossedProduct::build(phi.algebra(), phi.type(), phi.etas(), std::move(f));
  } catch (const Error& e) {
    throw InternalError(std::string("corrected factor set failed to build a crossed product: ") + e.what());
  }
}

CollectiveCharacter character_product(const CollectiveCharacter& a, const CollectiveCharacter& b) {
  if (!(a.group() == b.group()) || !same_type(*a.type(), *b.type()))
    throw Error(ErrorKind::TypeMismatch, "character product needs the same group and type");
  const auto& k = *a.algebra()->ring();
  auto base = Algebra::tensor(*a.algebra(), *b.algebra());
  std::vector<AlgebraMap> eta;
  for (int g = 0; g < a.group().order(); ++g) {
    std::vector<Vec> images;
    for (std::size_t i = 0; i < a.algebra()->rank(); ++i)
      for (std::size_t j = 0; j < b.algebra()->rank(); ++j) {
        Vec x = a.eta(g)(a.algebra()->basis(i)), y = b.eta(g)(b.algebra()->basis(j));
        Vec v(x.size() * y.size(), 0);
        for (std::size_t p = 0; p < x.size(); ++p)
          for (std::size_t q = 0; q < y.size(); ++q) v[p * y.size() + q] = k.mul(x[p], y[q]);
        images.push_back(std::move(v));
      }
    eta.push_back(AlgebraMap::automorphism(base, std::move(images), a.type()->action()(g)));
  }
  return CollectiveCharacter::make(base, std::move(eta), a.type());
}

bool characters_equal(const CollectiveCharacter& a, const CollectiveCharacter& b,
                      const std::vector<AlgebraMap>& isomorphisms) {
  if (!a.algebra()->same_presentation(*b.algebra()) || !(a.group() == b.group()) ||
      !same_type(*a.type(), *b.type()))
    return false;
  std::vector<AlgebraMap> candidates{AlgebraMap::identity(a.algebra())};
  for (const auto& psi : isomorphisms) {
    if (!psi.is_K_linear() || !psi.is_bijective() || !psi.source()->same_presentation(*a.algebra()))
      throw Error(ErrorKind::InvalidArgument, "candidate is not a K-automorphism of R");
    candidates.push_back(psi);
  }
  for (const auto& psi : candidates) {
    auto psi_inv = psi.inverse();
    bool all = true;
    for (int g = 0; g < a.group().order() && all; ++g) {
      auto moved = psi.compose(a.eta(g)).compose(psi_inv);
      all = is_inner(*a.algebra(), b.eta(g).compose(moved.inverse())).has_value();
    }
    if (all) return true;
  }
  return false;
}

}  // namespace cliffordsys
