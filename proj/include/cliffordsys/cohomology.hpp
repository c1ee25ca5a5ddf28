#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cliffordsys/abelian.hpp"
#include "cliffordsys/integer_matrix.hpp"

namespace cliffordsys {

inline constexpr std::size_t kLinearAlgebraBudget = 20000;

/// Normalized inhomogeneous n-cochain G^n -> M. Only tuples of non-identity
/// elements are stored; position of (g_1..g_n) is sum (g_i - 1)(|G|-1)^(n-i).
/// Values are additive coordinates in M.
class Cochain {
 public:
  Cochain(GModulePtr module, int degree);

  int degree() const noexcept { return degree_; }
  const GModulePtr& module() const noexcept { return module_; }
  std::size_t positions() const noexcept { return positions_; }

  /// Value at an arbitrary tuple; zero whenever some entry is the identity.
  Coords at(std::span<const int> tuple) const;
  void set(std::span<const int> tuple, const Coords& value);
  Coords value(std::size_t position) const;
  void set_value(std::size_t position, const Coords& value);
  std::vector<int> tuple(std::size_t position) const;
  /// Position of a tuple of non-identity elements.
  std::size_t position(std::span<const int> tuple) const;

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain operator-() const;
  bool is_zero() const;
  bool operator==(const Cochain& other) const { return degree_ == other.degree_ && data_ == other.data_; }

  /// Flat coordinates (position-major), as used by the integer matrices.
  const std::vector<long>& data() const noexcept { return data_; }
  std::vector<Integer> integer_data() const;
  static Cochain from_integers(GModulePtr module, int degree, std::span<const Integer> data);

 private:
  GModulePtr module_;
  int degree_;
  std::size_t positions_;
  std::vector<long> data_;
};

/// (dc)(g_1..g_{n+1}) = g_1 c(g_2..) + sum_i (-1)^i c(.., g_i g_{i+1}, ..)
///                      + (-1)^{n+1} c(g_1..g_n), written additively.
Cochain coboundary(const Cochain& c);

struct CocycleCheck {
  bool ok = true;
  std::vector<int> witness;  // first tuple where dc is nonzero
};
CocycleCheck is_cocycle(const Cochain& c);

/// Integer matrix of d^n : C^n -> C^{n+1} in flat coordinates.
IntMatrix coboundary_matrix(const GModule& m, int n);

/// H^n(G, M) as Z^n / B^n.
class Cohomology {
 public:
  /// n in {1,2,3}. Throws TooLarge when the matrix of d^n exceeds `budget`
  /// rows, InvalidArgument for infinite coefficients.
  static Cohomology compute(GModulePtr module, int n, std::size_t budget = kLinearAlgebraBudget);

  int degree() const noexcept { return degree_; }
  const GModulePtr& module() const noexcept { return module_; }
  /// Invariant factors of H^n; empty for the trivial group.
  const std::vector<long>& factors() const noexcept { return factors_; }
  /// One cocycle per invariant factor.
  const std::vector<Cochain>& representatives() const noexcept { return representatives_; }
  /// Coordinates of the class of z. Throws NotCocycle.
  std::vector<long> class_of(const Cochain& z) const;

 private:
  GModulePtr module_;
  int degree_ = 0;
  std::vector<long> factors_;
  std::vector<Cochain> representatives_;
  std::shared_ptr<const Subquotient> quotient_;
};

/// Solves z = target + dc for a cochain c of degree n-1, with the integer
/// system factored once so that repeated queries are cheap.
class CoboundarySolver {
 public:
  CoboundarySolver(GModulePtr module, int n, std::size_t budget = kLinearAlgebraBudget);
  /// Throws NotCocycle if either input is not a cocycle.
  std::optional<Cochain> solve(const Cochain& z, const Cochain& target) const;
  /// No cocycle check; `difference` must be a degree-n cochain.
  std::optional<Cochain> solve_difference(const Cochain& difference) const;

 private:
  GModulePtr module_;
  int degree_;
  std::size_t source_size_;
  SmithDecomposition smith_;
};

std::optional<Cochain> solve_coboundary(const Cochain& z, const Cochain& target);

}  // namespace cliffordsys
