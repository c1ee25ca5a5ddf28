#include "cliffordsys/group.hpp"

#include <algorithm>
#include <string>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(int n, std::vector<int> table, std::string name)
    : n_(n), table_(std::move(table)), inverse_(static_cast<std::size_t>(n), -1), name_(std::move(name)) {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == identity) inverse_[static_cast<std::size_t>(a)] = b;

  std::vector<char> in_subgroup(static_cast<std::size_t>(n_), 0);
  in_subgroup[0] = 1;
  for (int g = 1; g < n_; ++g) {
    if (in_subgroup[static_cast<std::size_t>(g)]) continue;
    generators_.push_back(g);
    std::vector<int> frontier{identity};
    std::fill(in_subgroup.begin(), in_subgroup.end(), 0);
    in_subgroup[0] = 1;
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int s : generators_) {
        int y = mul(x, s);
        if (!in_subgroup[static_cast<std::size_t>(y)]) {
          in_subgroup[static_cast<std::size_t>(y)] = 1;
          frontier.push_back(y);
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return FiniteGroup(n, std::move(t), "Z/" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(order * order));
  for (int x = 0; x < order; ++x) {
    int i = x % n, a = x / n;
    for (int y = 0; y < order; ++y) {
      int k = y % n, b = y / n;
      // r^i s^a r^k s^b = r^(i + (-1)^a k) s^(a+b)
      int rot = ((i + (a ? -k : k)) % n + n) % n;
      t[static_cast<std::size_t>(x * order + y)] = rot + n * ((a + b) % 2);
    }
  }
  return FiniteGroup(order, std::move(t), "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& left, const FiniteGroup& right) {
  const int m = right.order();
  const int order = left.order() * m;
  std::vector<int> t(static_cast<std::size_t>(order * order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      t[static_cast<std::size_t>(x * order + y)] = left.mul(x / m, y / m) * m + right.mul(x % m, y % m);
  return FiniteGroup(order, std::move(t), left.name() + "x" + right.name());
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty table");
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    const auto& row = table[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::NotAGroup, "table is not square", "row " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      int v = row[static_cast<std::size_t>(b)];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::NotAGroup, "entry out of range",
                    "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      t.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a * n + b)]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(ErrorKind::NotAGroup, "associativity fails", triple(a, b, c));
  for (int a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a)
      throw Error(ErrorKind::NotAGroup, "index 0 is not a two-sided identity", "(0," + std::to_string(a) + ")");
  }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b) found = at(a, b) == 0 && at(b, a) == 0;
    if (!found) throw Error(ErrorKind::NotAGroup, "element has no inverse", "(" + std::to_string(a) + ")");
  }
  return FiniteGroup(n, std::move(t), "G" + std::to_string(n));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

}  // namespace cliffordsys
