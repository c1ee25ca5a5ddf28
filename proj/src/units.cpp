#include "cliffordsys/units.hpp"

#include <algorithm>
#include <limits>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

constexpr std::uint64_t npos = std::numeric_limits<std::uint64_t>::max();

std::vector<std::uint64_t> primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

UnitGroup UnitGroup::compute(RingPtr ring, std::uint64_t bound) {
  const auto& K = *ring;
  if (K.size() > bound)
    throw Error(ErrorKind::TooLarge, "ring exceeds the unit-group enumeration bound", std::to_string(K.size()));
  std::vector<Elem> units;
  for (Elem x = 0; x < K.size(); ++x)
    if (K.is_unit(x)) units.push_back(x);
  const std::uint64_t n = units.size();
  const auto primes = primes_of(n);

  std::vector<char> in_h(K.size(), 0);
  std::vector<Elem> h{K.one()};
  in_h[K.one()] = 1;
  std::vector<Elem> gens;
  std::vector<long> orders;

  while (h.size() < n) {
    // element of maximal order modulo H, lowest index on ties
    Elem best = 0;
    std::uint64_t best_order = 0;
    for (Elem x : units) {
      if (in_h[x]) continue;
      std::uint64_t ord = n;
      for (std::uint64_t r : primes)
        while (ord % r == 0 && in_h[K.pow(x, ord / r)]) ord /= r;
      if (ord > best_order) {
        best_order = ord;
        best = x;
      }
    }
    // lift to an element whose order equals its order modulo H
    Elem lifted = 0;
    for (Elem y : h) {
      Elem cand = K.mul(best, K.inv(y));
      if (K.pow(cand, best_order) == K.one()) {
        lifted = cand;
        break;
      }
    }
    if (lifted == 0) throw InternalError("unit group peeling found no lift");
    std::vector<Elem> next;
    next.reserve(h.size() * best_order);
    Elem power = K.one();
    for (std::uint64_t j = 0; j < best_order; ++j) {
      for (Elem y : h) next.push_back(K.mul(y, power));
      power = K.mul(power, lifted);
    }
    for (Elem e : next) in_h[e] = 1;
    h = std::move(next);
    gens.push_back(lifted);
    orders.push_back(static_cast<long>(best_order));
  }

  UnitGroup u;
  u.ring_ = std::move(ring);
  std::reverse(gens.begin(), gens.end());
  std::reverse(orders.begin(), orders.end());
  u.structure_ = AbelianGroup(orders);
  u.generators_ = gens;
  u.by_index_.assign(n, 0);
  u.index_of_.assign(K.size(), npos);
  if (n > 0) {
    u.by_index_[0] = K.one();
    std::vector<long> digits(orders.size(), 0);
    std::vector<std::uint64_t> stride(orders.size(), 1);
    for (std::size_t i = 1; i < orders.size(); ++i) stride[i] = stride[i - 1] * static_cast<std::uint64_t>(orders[i - 1]);
    for (std::uint64_t idx = 1; idx < n; ++idx) {
      std::size_t i = 0;
      while (digits[i] + 1 == orders[i]) digits[i++] = 0;
      ++digits[i];
      u.by_index_[idx] = K.mul(u.by_index_[idx - stride[i]], gens[i]);
    }
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      Elem e = u.by_index_[idx];
      if (u.index_of_[e] != npos) throw InternalError("unit group coordinates are not injective");
      u.index_of_[e] = idx;
    }
  }
  return u;
}

std::uint64_t UnitGroup::log_index(Elem x) const {
  if (x >= index_of_.size() || index_of_[x] == npos)
    throw Error(ErrorKind::InvalidArgument, "not a unit", ring_->element_to_string(x));
  return index_of_[x];
}

Coords UnitGroup::log(Elem x) const { return structure_.element(log_index(x)); }

Elem UnitGroup::exp(const Coords& c) const { return by_index_[structure_.index_of(c)]; }

}  // namespace cliffordsys
