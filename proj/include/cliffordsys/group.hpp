#pragma once

#include <string>
#include <vector>

namespace cliffordsys {

/// A finite group given by its multiplication table. Elements are the
/// indices 0..order-1 and the identity is always index 0.
class FiniteGroup {
 public:
  static constexpr int identity = 0;

  static FiniteGroup cyclic(int n);
  /// Dihedral group of order 2n; element r^i s^j has index i + n*j.
  static FiniteGroup dihedral(int n);
  /// Element (a, b) has index a * |right| + b.
  static FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right);
  /// Validates the table as a group law; throws Error(NotAGroup) with a
  /// witness triple (or pair) on failure.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  int order() const noexcept { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  bool is_abelian() const;

  /// Greedy generating set: lowest index element outside the subgroup
  /// generated so far.
  const std::vector<int>& generators() const noexcept { return generators_; }
  const std::string& name() const noexcept { return name_; }

  bool operator==(const FiniteGroup& other) const { return n_ == other.n_ && table_ == other.table_; }

 private:
  FiniteGroup(int n, std::vector<int> table, std::string name);

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::string name_;
};

}  // namespace cliffordsys
