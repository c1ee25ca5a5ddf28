#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffordsys/action.hpp"
#include "cliffordsys/algebra.hpp"
#include "cliffordsys/character.hpp"
#include "cliffordsys/cohomology.hpp"

namespace cliffordsys {

/// R * G = sum_g R u_g with u_g r = eta_g(r) u_g and u_g u_h = f(g,h) u_gh.
/// R is an algebra over K = type ring. The ambient algebra is over K when
/// the type is trivial and over k otherwise (where eta_g is only
/// k-linear); its basis element beta_t e_i u_g sits at index
/// (g * rank(R) + i) * deg + t, with beta the k-basis of K.
class CrossedProduct {
 public:
  /// eta indexed by g, f by g * |G| + h. Checks, in order: shapes and
  /// normalization (InvalidArgument), types (TypeMismatch, witness g), unit
  /// values (NoUnit, witness pair), eta_g eta_h = iota_f eta_gh
  /// (NotCompatible, witness pair), the twisted identity
  /// eta_s(f(t,c)) f(s,tc) = f(s,t) f(st,c) (NotAssociative, witness
  /// triple); then assembles and re-validates the ambient algebra.
  static CrossedProduct build(AlgebraPtr base, UnitModulePtr type, std::vector<AlgebraMap> eta, std::vector<Vec> f);

  const AlgebraPtr& base() const noexcept { return base_; }
  const UnitModulePtr& type() const noexcept { return type_; }
  const FiniteGroup& group() const { return type_->group(); }
  const AlgebraMap& eta(int g) const { return eta_[static_cast<std::size_t>(g)]; }
  const std::vector<AlgebraMap>& etas() const noexcept { return eta_; }
  const Vec& f(int g, int h) const { return f_[static_cast<std::size_t>(g * group().order() + h)]; }
  const std::vector<Vec>& factor_set() const noexcept { return f_; }

  const AlgebraPtr& ambient() const noexcept { return ambient_; }
  const ScalarRestriction& scalars() const noexcept { return scalars_; }
  /// Degree of each ambient basis element.
  const std::vector<int>& grading() const noexcept { return grading_; }
  /// Ambient coordinates of r u_g.
  Vec embed(const Vec& r, int g) const;
  Vec unit_of(int g) const { return embed(base_->unit(), g); }

 private:
  CrossedProduct() = default;

  AlgebraPtr base_;
  UnitModulePtr type_;
  std::vector<AlgebraMap> eta_;
  std::vector<Vec> f_;
  AlgebraPtr ambient_;
  ScalarRestriction scalars_;
  std::vector<int> grading_;
};

struct StrongGradingReport {
  bool strong = false;
  bool crossed = false;
  /// First pair (g,h) with A_g A_h != A_gh, when not strong.
  std::optional<std::pair<int, int>> span_failure;
  /// Unit found in each component, by degree.
  std::vector<std::optional<Vec>> unit_witnesses;
  /// Component proven unit-free by a compression certificate: subspaces U,
  /// W with dim U > dim W and x U inside W for all x in the component.
  std::optional<int> certified_component;
  std::size_t certificate_dim_u = 0, certificate_dim_w = 0;
  std::uint64_t enumerated = 0;
};

/// `degrees[i]` is the degree of basis element i. Throws InvalidGrading when
/// the degrees are out of range or A_g A_h is not inside A_gh, TooLarge
/// when a component needs more than kSearchBudget candidates.
StrongGradingReport verify_strongly_graded(const Algebra& a, const FiniteGroup& g, const std::vector<int>& degrees);

/// Base R (x)_K R', eta_g (x) eta'_g, f (x) f'. TypeMismatch unless both
/// have the same G and type.
CrossedProduct graded_product(const CrossedProduct& a, const CrossedProduct& b);

/// f'(g,h) = alpha(g,h) f(g,h). Throws NotCocycle, TypeMismatch.
CrossedProduct twist(const Cochain& alpha, const CrossedProduct& a);

/// K^alpha_phi G over the rank-one base K.
CrossedProduct sigma_phi(const Cochain& alpha, const UnitModulePtr& type);

/// alpha with f(g,h) = alpha(g,h) * 1 for a crossed product whose base has
/// rank one. Throws InvalidArgument otherwise.
Cochain cocycle_of(const CrossedProduct& a);

/// Crossed product over psi.target() with eta' = psi eta psi^-1 and
/// f' = psi(f). psi must be a K-linear isomorphism out of the base.
CrossedProduct transport(const CrossedProduct& a, const AlgebraMap& psi);

struct GradedEquivalence {
  bool equivalent = false;
  /// Whether the direct search over lambda ran (it is skipped past
  /// kSearchBudget candidates); when it ran it agreed with the solver.
  bool direct_path_ran = false;
  std::optional<Cochain> lambda;
};

/// [K^alpha G] = [K^beta G] decided twice: by searching lambda with
/// alpha = beta + d(lambda) directly and by the cohomology solver. A
/// disagreement raises InternalError. Throws NotCocycle.
GradedEquivalence graded_equivalent_over_K(const Cochain& alpha, const Cochain& beta);

struct CrossedEquivalence {
  bool equivalent = false;
  /// False when some intertwiner space has dimension > 1 and the answer
  /// "not equivalent" may be a miss.
  bool complete = true;
};

/// Graded isomorphism A -> B restricting to the identity on a shared base
/// R: u_g -> x_g u_g with x_g a unit intertwining eta_A,g and eta_B,g.
CrossedEquivalence crossed_equivalent(const CrossedProduct& a, const CrossedProduct& b);

/// g -> [eta_g], with the type of a.
CollectiveCharacter chi(const CrossedProduct& a);

/// The coefficientwise skew group algebra of R with f = 1; needs the
/// structure constants of R to be fixed by the type.
CrossedProduct skew_group_algebra(const AlgebraPtr& r, const UnitModulePtr& type);

}  // namespace cliffordsys
