#pragma once

#include <optional>
#include <vector>

#include "cliffordsys/character.hpp"
#include "cliffordsys/cohomology.hpp"
#include "cliffordsys/graded.hpp"

namespace cliffordsys {

struct ObstructionClass {
  /// T(s,t,c) = f(s,t) f(st,c) [eta_s(f(t,c)) f(s,tc)]^-1, in K^*_phi.
  Cochain T;
  /// Invariant factors of H^3(G, K^*_phi) and the class of T.
  std::vector<long> factors;
  std::vector<long> coords;

  bool is_zero() const;
};

/// Uses the character's own factor set.
ObstructionClass obstruction_class(const CollectiveCharacter& phi);
/// Uses a caller-supplied factor set; InvalidArgument unless is_factor_set.
/// A non-central or non-cocycle T raises InternalError.
ObstructionClass obstruction_class(const CollectiveCharacter& phi, const std::vector<Vec>& f);

/// The crossed product R *_f' G with f' = f c for dc = T when the class
/// vanishes, otherwise none.
std::optional<CrossedProduct> realize(const CollectiveCharacter& phi);

/// eta_g (x) eta'_g on R (x)_K R'. TypeMismatch unless the types agree.
CollectiveCharacter character_product(const CollectiveCharacter& a, const CollectiveCharacter& b);

/// Equal classes in Hom(G, Out(R)): some psi in {id} + `isomorphisms` makes
/// every b.eta(g) (psi a.eta(g) psi^-1)^-1 inner. Complete for K-central
/// simple R; for other R a negative answer may be a miss.
bool characters_equal(const CollectiveCharacter& a, const CollectiveCharacter& b,
                      const std::vector<AlgebraMap>& isomorphisms = {});

}  // namespace cliffordsys
