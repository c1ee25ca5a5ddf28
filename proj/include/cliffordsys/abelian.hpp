#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cliffordsys/group.hpp"
#include "cliffordsys/integer_matrix.hpp"

namespace cliffordsys {

using Coords = std::vector<long>;

/// Finitely generated abelian group Z/d_1 + ... + Z/d_r with d_i | d_{i+1}.
/// A zero factor stands for an infinite cyclic summand.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<long> invariant_factors);

  const std::vector<long>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  bool is_finite() const;
  /// Number of elements; throws InvalidArgument for infinite groups.
  std::uint64_t order() const;

  Coords zero() const { return Coords(factors_.size(), 0); }
  Coords reduce(Coords x) const;
  Coords add(const Coords& a, const Coords& b) const;
  Coords sub(const Coords& a, const Coords& b) const;
  Coords neg(const Coords& a) const;
  Coords scale(const Coords& a, long k) const;
  bool is_zero(const Coords& a) const;

  /// Mixed-radix index of a reduced element (finite groups only); the
  /// first coordinate varies fastest.
  std::uint64_t index_of(const Coords& a) const;
  Coords element(std::uint64_t index) const;

  std::string to_string() const;
  bool operator==(const AbelianGroup& other) const = default;

 private:
  std::vector<long> factors_;
};

/// A finite abelian group with a left G-action by automorphisms. The action
/// of g is an integer matrix whose column j is the image of the j-th
/// standard generator.
class GModule {
 public:
  static std::shared_ptr<const GModule> trivial(const FiniteGroup& g, const AbelianGroup& a);
  /// Matrices indexed by group element; validated as an action.
  static std::shared_ptr<const GModule> from_matrices(const FiniteGroup& g, const AbelianGroup& a,
                                                      std::vector<std::vector<long>> matrices);
  /// Images of G.generators() extended along the group law.
  static std::shared_ptr<const GModule> from_generator_images(const FiniteGroup& g, const AbelianGroup& a,
                                                              const std::vector<std::vector<long>>& images);

  const FiniteGroup& group() const noexcept { return group_; }
  const AbelianGroup& module() const noexcept { return module_; }
  std::size_t rank() const noexcept { return module_.rank(); }

  Coords act(int g, const Coords& x) const;
  /// Row-major r x r matrix for element g.
  const std::vector<long>& matrix(int g) const { return matrices_[static_cast<std::size_t>(g)]; }
  bool is_trivial() const;

  std::string to_string() const;

 private:
  GModule(FiniteGroup g, AbelianGroup a, std::vector<std::vector<long>> matrices);

  FiniteGroup group_;
  AbelianGroup module_;
  std::vector<std::vector<long>> matrices_;
};

using GModulePtr = std::shared_ptr<const GModule>;

}  // namespace cliffordsys
