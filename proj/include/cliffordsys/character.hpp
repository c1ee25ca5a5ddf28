#pragma once

#include <memory>
#include <vector>

#include "cliffordsys/action.hpp"
#include "cliffordsys/algebra.hpp"

namespace cliffordsys {

/// G -> Out_k(R) through representatives eta_g with eta_e = id. For every
/// pair, eta_g eta_h eta_gh^-1 is inner and its unit is stored. The type is
/// the action on K obtained from the companions of the eta_g.
class CollectiveCharacter {
 public:
  /// eta indexed by group element. With `type` given, companions must match
  /// it (TypeMismatch); otherwise the type is built from the companions.
  /// Throws NotACharacter (witness pair) when some eta_g eta_h eta_gh^-1 is
  /// not inner, NotInnerCompatible when eta_e is not the identity or an
  /// image is not an automorphism of R.
  static CollectiveCharacter make(AlgebraPtr r, std::vector<AlgebraMap> eta, UnitModulePtr type);
  static CollectiveCharacter make(const FiniteGroup& g, AlgebraPtr r, std::vector<AlgebraMap> eta);
  /// Images of g.generators(), extended along a breadth-first word order.
  static CollectiveCharacter from_generators(const FiniteGroup& g, AlgebraPtr r,
                                             const std::vector<AlgebraMap>& generator_images,
                                             UnitModulePtr type = nullptr);
  /// All eta_g equal to the type's coefficientwise action on R.
  static CollectiveCharacter trivial(AlgebraPtr r, UnitModulePtr type);

  const FiniteGroup& group() const { return type_->group(); }
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const AlgebraMap& eta(int g) const { return eta_[static_cast<std::size_t>(g)]; }
  const std::vector<AlgebraMap>& etas() const noexcept { return eta_; }
  const UnitModulePtr& type() const noexcept { return type_; }

  /// Normalized factor set: f(g,h) with eta_g eta_h = iota_f eta_gh, taken
  /// from the inner-automorphism search; f(e,g) = f(g,e) = 1. Index g*|G|+h.
  const std::vector<Vec>& factor_set() const noexcept { return factor_set_; }
  const Vec& f(int g, int h) const {
    return factor_set_[static_cast<std::size_t>(g * group().order() + h)];
  }

 private:
  CollectiveCharacter() = default;

  AlgebraPtr algebra_;
  std::vector<AlgebraMap> eta_;
  UnitModulePtr type_;
  std::vector<Vec> factor_set_;
};

/// Whether two actions on the same ring agree on every element.
bool same_type(const UnitModule& a, const UnitModule& b);

/// Whether f satisfies eta_g eta_h = iota_f(g,h) eta_gh on every basis
/// element and is normalized with unit values.
bool is_factor_set(const CollectiveCharacter& phi, const std::vector<Vec>& f);

}  // namespace cliffordsys
