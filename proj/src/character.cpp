#include "cliffordsys/character.hpp"

#include <deque>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

bool same_type(const UnitModule& a, const UnitModule& b) {
  if (&a == &b) return true;
  if (!(a.group() == b.group())) return false;
  if (a.ring().signature() != b.ring().signature()) return false;
  for (int g = 0; g < a.group().order(); ++g)
    if (!(a.action()(g) == b.action()(g))) return false;
  return true;
}

CollectiveCharacter CollectiveCharacter::make(AlgebraPtr r, std::vector<AlgebraMap> eta, UnitModulePtr type) {
  const auto& G = type->group();
  const int n = G.order();
  if (eta.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::InvalidArgument, "one representative per group element is required");
  if (r->ring()->signature() != type->ring().signature())
    throw Error(ErrorKind::TypeMismatch, "character type acts on a different ring");
  for (int g = 0; g < n; ++g) {
    const auto& e = eta[static_cast<std::size_t>(g)];
    if (!e.source()->same_presentation(*r) || !e.target()->same_presentation(*r) || !e.is_bijective())
      throw Error(ErrorKind::NotInnerCompatible, "representative is not an automorphism of R", std::to_string(g));
    if (!(e.companion() == type->action()(g)))
      throw Error(ErrorKind::TypeMismatch, "representative does not restrict to the declared type",
                  std::to_string(g));
  }
  if (!(eta[0] == AlgebraMap::identity(r)))
    throw Error(ErrorKind::NotInnerCompatible, "the identity element must map to the identity", "0");

  CollectiveCharacter c;
  c.algebra_ = r;
  c.type_ = std::move(type);
  c.factor_set_.assign(static_cast<std::size_t>(n * n), r->unit());
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h) {
      auto composite = eta[static_cast<std::size_t>(g)]
                           .compose(eta[static_cast<std::size_t>(h)])
                           .compose(eta[static_cast<std::size_t>(G.mul(g, h))].inverse());
      auto u = is_inner(*r, composite);
      if (!u) throw Error(ErrorKind::NotACharacter, "eta_g eta_h eta_gh^-1 is not inner", pair_str(g, h));
      c.factor_set_[static_cast<std::size_t>(g * n + h)] = *u;
    }
  c.eta_ = std::move(eta);
  return c;
}

CollectiveCharacter CollectiveCharacter::make(const FiniteGroup& g, AlgebraPtr r, std::vector<AlgebraMap> eta) {
  if (eta.size() != static_cast<std::size_t>(g.order()))
    throw Error(ErrorKind::InvalidArgument, "one representative per group element is required");
  std::vector<RingAutomorphism> gens;
  for (int s : g.generators()) gens.push_back(eta[static_cast<std::size_t>(s)].companion());
  RingAction action = gens.empty() ? RingAction::trivial(g, r->ring())
                                   : RingAction::from_generator_images(g, r->ring(), gens);
  for (int x = 0; x < g.order(); ++x)
    if (!(action(x) == eta[static_cast<std::size_t>(x)].companion()))
      throw Error(ErrorKind::NotACharacter, "companions do not form an action", std::to_string(x));
  return make(std::move(r), std::move(eta), std::make_shared<const UnitModule>(std::move(action)));
}

CollectiveCharacter CollectiveCharacter::from_generators(const FiniteGroup& g, AlgebraPtr r,
                                                         const std::vector<AlgebraMap>& generator_images,
                                                         UnitModulePtr type) {
  const auto& gens = g.generators();
  if (generator_images.size() != gens.size())
    throw Error(ErrorKind::InvalidArgument, "one image per generator is required");
  std::vector<std::optional<AlgebraMap>> eta(static_cast<std::size_t>(g.order()));
  eta[0] = AlgebraMap::identity(r);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = g.mul(x, gens[i]);
      if (eta[static_cast<std::size_t>(y)]) continue;
      eta[static_cast<std::size_t>(y)] = eta[static_cast<std::size_t>(x)]->compose(generator_images[i]);
      queue.push_back(y);
    }
  }
  std::vector<AlgebraMap> all;
  for (auto& e : eta) all.push_back(*e);
  if (type) return make(std::move(r), std::move(all), std::move(type));
  return make(g, std::move(r), std::move(all));
}

CollectiveCharacter CollectiveCharacter::trivial(AlgebraPtr r, UnitModulePtr type) {
  std::vector<AlgebraMap> eta;
  for (int g = 0; g < type->group().order(); ++g) eta.push_back(AlgebraMap::coefficientwise(r, type->action()(g)));
  return make(std::move(r), std::move(eta), std::move(type));
}

bool is_factor_set(const CollectiveCharacter& phi, const std::vector<Vec>& f) {
  const auto& G = phi.group();
  const int n = G.order();
  const auto& r = *phi.algebra();
  if (f.size() != static_cast<std::size_t>(n * n)) return false;
  for (int g = 0; g < n; ++g)
    if (f[static_cast<std::size_t>(g)] != r.unit() || f[static_cast<std::size_t>(g * n)] != r.unit()) return false;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const Vec& u = f[static_cast<std::size_t>(g * n + h)];
      if (!r.is_unit(u)) return false;
      for (std::size_t i = 0; i < r.rank(); ++i) {
        Vec lhs = r.mul(phi.eta(g)(phi.eta(h)(r.basis(i))), u);
        Vec rhs = r.mul(u, phi.eta(G.mul(g, h))(r.basis(i)));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

}  // namespace cliffordsys
