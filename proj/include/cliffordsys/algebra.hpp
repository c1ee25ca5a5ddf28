#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffordsys/group.hpp"
#include "cliffordsys/linalg.hpp"
#include "cliffordsys/ring.hpp"

namespace cliffordsys {

inline constexpr std::size_t kMaxAlgebraRank = 64;
inline constexpr std::uint64_t kSearchBudget = 1000000;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Associative unital algebra, free of finite rank over a finite commutative
/// ring K. Elements are coordinate vectors in the fixed basis e_0..e_{n-1}
/// with e_i e_j = sum_l c[i][j][l] e_l. Every instance has passed the
/// associativity and unit checks.
class Algebra {
 public:
  /// products[i * rank + j] = coordinates of e_i e_j. An empty `unit` asks
  /// for the unit to be solved for (fields only). Throws NotAssociative
  /// (witness triple) or NoUnit.
  static AlgebraPtr from_constants(RingPtr ring, std::size_t rank, std::vector<Vec> products, Vec unit,
                                   std::string name = "constants");
  /// K as a rank-one algebra over itself.
  static AlgebraPtr base_ring(RingPtr ring);
  /// Basis E_ij at index i * n + j.
  static AlgebraPtr matrix_algebra(std::size_t n, RingPtr ring);
  static AlgebraPtr group_algebra(const FiniteGroup& g, RingPtr ring);
  static AlgebraPtr opposite(const Algebra& a);
  /// Basis of a followed by basis of b.
  static AlgebraPtr direct_product(const Algebra& a, const Algebra& b);
  /// a (x)_K b with e_i (x) f_j at index i * rank(b) + j. TypeMismatch if the
  /// base rings differ.
  static AlgebraPtr tensor(const Algebra& a, const Algebra& b);
  /// a as an algebra over s.small, basis beta_t e_i at index i * deg + t.
  static AlgebraPtr restrict_scalars(const Algebra& a, const ScalarRestriction& s);
  /// b (x)_k K for b over s.small: same constants read in s.big.
  static AlgebraPtr extend_scalars(const Algebra& b, const ScalarRestriction& s);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const Vec& unit() const noexcept { return unit_; }
  const std::string& name() const noexcept { return name_; }
  const Vec& product(std::size_t i, std::size_t j) const { return products_[i * rank_ + j]; }

  Vec zero() const { return Vec(rank_, 0); }
  Vec basis(std::size_t i) const;
  Vec scalar(Elem lambda) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(Elem lambda, const Vec& x) const;
  Vec mul(const Vec& x, const Vec& y) const;

  /// Matrix of y -> x y; column j is x e_j.
  KMatrix left_matrix(const Vec& x) const;
  bool is_unit(const Vec& x) const;
  std::optional<Vec> inverse(const Vec& x) const;
  /// If x = lambda * 1 for some lambda in K, that lambda.
  std::optional<Elem> as_scalar(const Vec& x) const;

  /// Basis of the center, from x e_i = e_i x for all i.
  std::vector<Vec> center() const;
  bool is_K_central() const { return center().size() == 1; }

  bool same_presentation(const Algebra& other) const;

 private:
  Algebra() = default;
  static AlgebraPtr finish(Algebra a);

  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<Vec> products_;
  std::vector<std::vector<std::pair<std::size_t, Elem>>> sparse_;
  Vec unit_;
  std::string name_;
};

/// Semilinear multiplicative map between algebras over the same K:
/// psi(lambda x) = sigma(lambda) psi(x) for the companion sigma in Aut_k(K).
/// Every instance has been checked multiplicative on basis pairs and unital.
class AlgebraMap {
 public:
  /// images[i] = psi(e_i) in target coordinates. Throws NotAutomorphism
  /// with a witness pair.
  static AlgebraMap make(AlgebraPtr source, AlgebraPtr target, std::vector<Vec> images,
                         std::optional<RingAutomorphism> companion = std::nullopt);
  /// As make, additionally bijective with source == target.
  static AlgebraMap automorphism(AlgebraPtr a, std::vector<Vec> images,
                                 std::optional<RingAutomorphism> companion = std::nullopt);
  static AlgebraMap identity(AlgebraPtr a);
  /// x -> u x u^-1. Throws NoUnit.
  static AlgebraMap inner(AlgebraPtr a, const Vec& u);
  /// Coefficientwise application of sigma in the given basis; an
  /// automorphism whenever all structure constants lie in the fixed ring.
  static AlgebraMap coefficientwise(AlgebraPtr a, const RingAutomorphism& sigma);

  Vec operator()(const Vec& x) const;
  /// (this o other)(x) = this(other(x)).
  AlgebraMap compose(const AlgebraMap& other) const;
  /// Throws NotAutomorphism if not bijective.
  AlgebraMap inverse() const;
  bool is_bijective() const;
  bool is_K_linear() const { return companion_.is_identity(); }

  const AlgebraPtr& source() const noexcept { return source_; }
  const AlgebraPtr& target() const noexcept { return target_; }
  const std::vector<Vec>& images() const noexcept { return images_; }
  const RingAutomorphism& companion() const noexcept { return companion_; }
  bool operator==(const AlgebraMap& other) const {
    return images_ == other.images_ && companion_ == other.companion_;
  }

 private:
  AlgebraMap() = default;

  AlgebraPtr source_, target_;
  std::vector<Vec> images_;
  RingAutomorphism companion_;
};

/// First unit of the span of `basis` in the search order used throughout:
/// the basis vectors, then sums of two of them, then every combination in
/// lexicographic coefficient order. Throws TooLarge past kSearchBudget.
std::optional<Vec> find_unit(const Algebra& a, const std::vector<Vec>& basis);

/// Unit u with eta(r) = u r u^-1 for all r, or none; find_unit over the
/// solution space of u r = eta(r) u.
std::optional<Vec> is_inner(const Algebra& a, const AlgebraMap& eta);

/// Canonical map A (x)_K A^op -> End_K(A) is bijective. Throws NotAField.
bool is_central_simple(const Algebra& a);

/// Change of basis: the new basis vectors are the columns of p (old
/// coordinates). Returns the rebased algebra and the K-isomorphism to it.
std::pair<AlgebraPtr, AlgebraMap> rebase(const AlgebraPtr& a, const KMatrix& p);

}  // namespace cliffordsys
