#include "cliffordsys/action.hpp"

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

bool agree_on_basis(const RingAutomorphism& a, const RingAutomorphism& b) {
  return a.basis_images() == b.basis_images();
}

}  // namespace

RingAction RingAction::trivial(const FiniteGroup& g, RingPtr ring) {
  RingAction a;
  a.group_ = g;
  a.images_.assign(static_cast<std::size_t>(g.order()), RingAutomorphism::identity(ring));
  a.ring_ = std::move(ring);
  return a;
}

RingAction RingAction::from_generator_images(const FiniteGroup& g, RingPtr ring,
                                             const std::vector<RingAutomorphism>& images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size())
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(gens.size()) + " generator images");
  for (const auto& im : images)
    if (im.ring()->signature() != ring->signature())
      throw Error(ErrorKind::InvalidArgument, "generator image acts on a different ring");
  RingAction a;
  a.group_ = g;
  a.ring_ = ring;
  a.images_.resize(static_cast<std::size_t>(g.order()));
  std::vector<char> seen(a.images_.size(), 0);
  a.images_[0] = RingAutomorphism::identity(ring);
  seen[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int y = g.mul(x, gens[s]);
      RingAutomorphism cand = a.images_[static_cast<std::size_t>(x)].compose(images[s]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        a.images_[static_cast<std::size_t>(y)] = std::move(cand);
        queue.push_back(y);
      } else if (!agree_on_basis(a.images_[static_cast<std::size_t>(y)], cand)) {
        throw Error(ErrorKind::NotCompatible, "generator images violate a group relation", pair_str(x, gens[s]));
      }
    }
  }
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (!agree_on_basis(a(x).compose(a(y)), a(g.mul(x, y))))
        throw Error(ErrorKind::NotCompatible, "images do not compose along the group law", pair_str(x, y));
  return a;
}

RingAction RingAction::frobenius(RingPtr ring, std::uint64_t q, int n) {
  auto frob = RingAutomorphism::power_map(ring, q);
  return from_generator_images(FiniteGroup::cyclic(n), std::move(ring), {frob});
}

std::vector<Elem> RingAction::fixed_subring() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < ring_->size(); ++x) {
    bool fixed = true;
    for (const auto& im : images_)
      if (im(x) != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return out;
}

bool RingAction::is_faithful() const {
  for (int g = 1; g < group_.order(); ++g)
    if (images_[static_cast<std::size_t>(g)].is_identity()) return false;
  return true;
}

bool RingAction::is_trivial() const {
  for (const auto& im : images_)
    if (!im.is_identity()) return false;
  return true;
}

bool RingAction::is_galois() const {
  return ring_->is_field() && is_faithful() && fixed_subring() == ring_->subring();
}

UnitModule::UnitModule(RingAction action) : action_(std::move(action)) {
  units_ = std::make_shared<const UnitGroup>(UnitGroup::compute(action_.ring()));
  const auto& A = units_->structure();
  const std::size_t r = A.rank();
  const auto& G = action_.group();
  std::vector<std::vector<long>> mats(static_cast<std::size_t>(G.order()), std::vector<long>(r * r, 0));
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t j = 0; j < r; ++j) {
      Elem img = action_.apply(g, units_->generators()[j]);
      Coords c = units_->log(img);
      for (std::size_t i = 0; i < r; ++i) mats[static_cast<std::size_t>(g)][i * r + j] = c[i];
    }
  module_ = GModule::from_matrices(G, A, std::move(mats));
}

}  // namespace cliffordsys
