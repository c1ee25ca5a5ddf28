#pragma once

#include <compare>
#include <map>
#include <string>

namespace cliffordsys {

/// Element x w^j of H = T^Z x| <w>, where T^Z is free abelian on p_i
/// (i in Z) and w p_i w^-1 = p_{i+2}. `t` maps i to the exponent of p_i and
/// never stores zeros.
struct HElement {
  std::map<long, long> t;
  long j = 0;

  static HElement p(long i, long e = 1);
  static HElement w(long e = 1);

  bool operator==(const HElement& other) const = default;
  std::string to_string() const;
};

/// (x, i)(y, j) = (x + shift_{2i}(y), i + j).
HElement h_mul(const HElement& a, const HElement& b);
HElement h_inv(const HElement& a);
/// w^i x w^-i on the T^Z part: p_k -> p_{k+2i}.
HElement shift(const HElement& a, long i);

/// Compare w exponents first; for equal exponents, x > y iff the exponent
/// of x - y at its largest nonzero index is positive.
std::strong_ordering h_cmp(const HElement& a, const HElement& b);

}  // namespace cliffordsys
