#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace cliffordsys {

/// Ring elements are indices 0..|K|-1. Index 0 is zero; the index order is
/// the tie-breaking order used by every search.
using Elem = std::uint32_t;

/// Default bound on |K| for operations that enumerate the ring.
inline constexpr std::uint64_t kRingEnumerationBound = 100000;

/// Polynomial over F_p, constant term first.
using Poly = std::vector<long>;
std::string poly_to_string(const Poly& f);

class FiniteCommRing;
using RingPtr = std::shared_ptr<const FiniteCommRing>;

/// Finite commutative ring: Z/m, F_p[x]/(f), or a direct product of those.
/// Each factor contributes coordinates (one residue for Z/m, deg f
/// coefficients for a field); an element's index is the mixed-radix number
/// formed by its coordinates, first coordinate least significant.
class FiniteCommRing {
 public:
  static RingPtr modular(long m);
  /// Throws NotIrreducible (witness: a factor) if f is reducible over F_p.
  static RingPtr field(long p, Poly f);
  static RingPtr product(const std::vector<RingPtr>& factors);
  /// Same ring with k replaced by the subring with the given members.
  /// Throws NotASubring with a witness pair if the set is not closed.
  RingPtr with_subring(const std::vector<Elem>& members) const;
  /// For a field K: the same field with k = {x : x^q = x}.
  RingPtr with_subfield_of_order(std::uint64_t q) const;

  std::uint64_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return one_; }
  Elem from_int(long n) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_unit(Elem a) const;
  /// Throws InvalidArgument for non-units.
  Elem inv(Elem a) const;

  std::size_t num_coords() const noexcept { return coord_moduli_.size(); }
  const std::vector<long>& coord_moduli() const noexcept { return coord_moduli_; }
  std::vector<long> coords(Elem a) const;
  Elem from_coords(const std::vector<long>& c) const;
  /// Additive generators: the elements with a single coordinate equal to 1.
  const std::vector<Elem>& additive_basis() const noexcept { return additive_basis_; }

  long characteristic() const noexcept { return characteristic_; }
  bool is_field() const noexcept { return is_field_; }
  std::uint64_t unit_count() const;

  bool in_subring(Elem a) const { return subring_member_[a] != 0; }
  const std::vector<Elem>& subring() const noexcept { return subring_; }
  bool subring_is_prime_ring() const;

  std::string element_to_string(Elem a) const;
  const std::string& name() const noexcept { return name_; }
  /// Structural description used for equality (same construction data).
  const std::string& signature() const noexcept { return signature_; }

 private:
  struct Component {
    bool field = false;
    long modulus = 0;  // m for Z/m, p for fields
    int degree = 1;
    Poly poly;
    std::uint64_t size = 0;
    std::uint64_t stride = 0;
    std::vector<Elem> exp_table;  // fields: powers of a primitive element
    std::vector<Elem> log_table;  // fields: discrete log, index 0 unused
  };

  FiniteCommRing() = default;
  void finalize(std::string name, std::string signature);
  static Component make_field_component(long p, const Poly& f);
  Elem component_value(Elem a, std::size_t c) const {
    return static_cast<Elem>((a / components_[c].stride) % components_[c].size);
  }
  Elem comp_add(const Component& c, Elem a, Elem b, bool subtract) const;
  Elem comp_mul(const Component& c, Elem a, Elem b) const;

  std::vector<Component> components_;
  std::uint64_t size_ = 1;
  Elem one_ = 0;
  std::vector<long> coord_moduli_;
  std::vector<Elem> additive_basis_;
  long characteristic_ = 1;
  bool is_field_ = false;
  std::vector<char> subring_member_;
  std::vector<Elem> subring_;
  std::string name_;
  std::string signature_;
};

/// A ring automorphism fixing the named subring k, stored as a full
/// permutation table plus the images of the additive basis. Every instance
/// has passed validation.
class RingAutomorphism {
 public:
  RingAutomorphism() = default;
  static RingAutomorphism identity(RingPtr k);
  /// Throws NotAutomorphism with a witness when the map is not well defined,
  /// not multiplicative, not unital, not bijective or moves k.
  static RingAutomorphism from_basis_images(RingPtr ring, const std::vector<Elem>& images);
  static RingAutomorphism from_function(RingPtr ring, const std::function<Elem(Elem)>& f);
  /// x -> x^q.
  static RingAutomorphism power_map(RingPtr ring, std::uint64_t q);

  Elem operator()(Elem x) const { return table_[x]; }
  /// (this o other)(x) = this(other(x)).
  RingAutomorphism compose(const RingAutomorphism& other) const;
  RingAutomorphism inverse() const;
  bool is_identity() const;

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Elem>& basis_images() const noexcept { return basis_images_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  bool operator==(const RingAutomorphism& other) const { return table_ == other.table_; }

 private:
  static RingAutomorphism validated(RingPtr ring, std::vector<Elem> table);

  RingPtr ring_;
  std::vector<Elem> table_;
  std::vector<Elem> basis_images_;
};

/// The subring k of K presented as a ring of its own, with K as a free
/// k-module. `basis` is greedy (lowest index first) and starts with 1.
struct ScalarRestriction {
  RingPtr big;
  RingPtr small;
  std::vector<Elem> embed;        // small element -> K element
  std::vector<Elem> basis;        // K elements
  std::vector<Elem> coordinates;  // |K| x degree, small elements

  std::size_t degree() const { return basis.size(); }
  Elem coordinate(Elem x, std::size_t t) const { return coordinates[x * basis.size() + t]; }
};

/// Throws Unsupported when k cannot be presented (not a field and not K) or
/// K is not free over k.
ScalarRestriction restrict_to_subring(const RingPtr& big);

}  // namespace cliffordsys
