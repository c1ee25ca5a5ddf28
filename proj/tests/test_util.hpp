#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cliffordsys/algebra.hpp"
#include "cliffordsys/error.hpp"
#include "doctest.h"

namespace testutil {

inline cliffordsys::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const cliffordsys::Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return cliffordsys::ErrorKind::InvalidArgument;
}

inline std::string witness_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const cliffordsys::Error& e) {
    return e.witness();
  }
  return "<none>";
}

/// Every element of a small algebra, coefficients in index order.
inline std::vector<cliffordsys::Vec> all_elements(const cliffordsys::Algebra& a) {
  const auto q = a.ring()->size();
  std::vector<cliffordsys::Vec> out;
  cliffordsys::Vec v(a.rank(), 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == q) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

/// Elements commuting with everything, by enumeration.
inline std::size_t brute_center_size(const cliffordsys::Algebra& a) {
  std::size_t count = 0;
  auto all = all_elements(a);
  for (const auto& x : all) {
    bool central = true;
    for (std::size_t i = 0; i < a.rank() && central; ++i)
      central = a.mul(x, a.basis(i)) == a.mul(a.basis(i), x);
    if (central) ++count;
  }
  return count;
}

/// No proper nonzero two-sided ideal: every nonzero x generates the whole
/// algebra, with the ideal closed by repeated left and right products by
/// basis elements, scalar multiples and sums.
inline bool brute_is_simple(const cliffordsys::Algebra& a) {
  const auto& k = *a.ring();
  auto all = all_elements(a);
  auto key = [&](const cliffordsys::Vec& v) {
    std::size_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * k.size() + v[i];
    return idx;
  };
  for (std::size_t s = 1; s < all.size(); ++s) {
    std::vector<char> in(all.size(), 0);
    std::vector<cliffordsys::Vec> members{a.zero()};
    in[0] = 1;
    auto insert = [&](const cliffordsys::Vec& v, std::vector<cliffordsys::Vec>& queue) {
      if (!in[key(v)]) {
        in[key(v)] = 1;
        members.push_back(v);
        queue.push_back(v);
      }
    };
    std::vector<cliffordsys::Vec> queue;
    insert(all[s], queue);
    while (!queue.empty()) {
      auto x = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < a.rank(); ++i) {
        insert(a.mul(a.basis(i), x), queue);
        insert(a.mul(x, a.basis(i)), queue);
      }
      for (cliffordsys::Elem lambda = 2; lambda < k.size(); ++lambda) insert(a.scale(lambda, x), queue);
      const std::size_t current = members.size();
      for (std::size_t m = 0; m < current; ++m) insert(a.add(members[m], x), queue);
    }
    if (members.size() != all.size()) return false;
  }
  return true;
}

}  // namespace testutil
