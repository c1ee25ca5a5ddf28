#pragma once

#include <memory>
#include <vector>

#include "cliffordsys/abelian.hpp"
#include "cliffordsys/group.hpp"
#include "cliffordsys/ring.hpp"
#include "cliffordsys/units.hpp"

namespace cliffordsys {

/// A homomorphism G -> Aut_k(K), materialized on every group element.
class RingAction {
 public:
  static RingAction trivial(const FiniteGroup& g, RingPtr ring);
  /// Images of g.generators(), extended along the group law. Throws
  /// NotCompatible (witness pair) when the images violate a relation.
  static RingAction from_generator_images(const FiniteGroup& g, RingPtr ring,
                                          const std::vector<RingAutomorphism>& images);
  /// Z/n acting on K by powers of x -> x^q.
  static RingAction frobenius(RingPtr ring, std::uint64_t q, int n);

  const FiniteGroup& group() const noexcept { return group_; }
  const RingPtr& ring() const noexcept { return ring_; }
  const RingAutomorphism& operator()(int g) const { return images_[static_cast<std::size_t>(g)]; }
  Elem apply(int g, Elem x) const { return images_[static_cast<std::size_t>(g)](x); }

  std::vector<Elem> fixed_subring() const;
  bool is_faithful() const;
  bool is_trivial() const;
  /// Faithful, K a field, and fixed subring equal to k.
  bool is_galois() const;

 private:
  FiniteGroup group_ = FiniteGroup::cyclic(1);
  RingPtr ring_;
  std::vector<RingAutomorphism> images_;
};

/// K^*_phi: the unit group as a G-module, with translation helpers between
/// ring units and additive coordinates.
class UnitModule {
 public:
  explicit UnitModule(RingAction action);

  const RingAction& action() const noexcept { return action_; }
  const UnitGroup& units() const noexcept { return *units_; }
  const GModulePtr& module() const noexcept { return module_; }
  const FiniteCommRing& ring() const noexcept { return *action_.ring(); }
  const FiniteGroup& group() const noexcept { return action_.group(); }

  Coords log(Elem u) const { return units_->log(u); }
  Elem exp(const Coords& c) const { return units_->exp(c); }

 private:
  RingAction action_;
  std::shared_ptr<const UnitGroup> units_;
  GModulePtr module_;
};

using UnitModulePtr = std::shared_ptr<const UnitModule>;

}  // namespace cliffordsys
