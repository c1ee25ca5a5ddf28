#pragma once

#include <memory>
#include <vector>

#include "cliffordsys/abelian.hpp"
#include "cliffordsys/ring.hpp"

namespace cliffordsys {

/// K^* in invariant-factor form with exact log/exp tables.
class UnitGroup {
 public:
  /// Throws TooLarge when |K| exceeds `bound`.
  static UnitGroup compute(RingPtr ring, std::uint64_t bound = kRingEnumerationBound);

  const AbelianGroup& structure() const noexcept { return structure_; }
  const RingPtr& ring() const noexcept { return ring_; }
  /// Generators matching the invariant factors, in the same order.
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  /// Throws InvalidArgument for a non-unit.
  Coords log(Elem u) const;
  Elem exp(const Coords& c) const;
  std::uint64_t log_index(Elem u) const;
  Elem exp_index(std::uint64_t i) const { return by_index_[i]; }

 private:
  RingPtr ring_;
  AbelianGroup structure_;
  std::vector<Elem> generators_;
  std::vector<Elem> by_index_;             // coordinate index -> unit
  std::vector<std::uint64_t> index_of_;    // element -> coordinate index, or npos
};

}  // namespace cliffordsys
