// Roster of collective characters shared by the obstruction tests and the
// acceptance suite.
#pragma once

#include <random>
#include <string>

#include "cliffordsys/obstruction.hpp"
#include "crossed_fixtures.hpp"

namespace fixtures {

inline const FiniteGroup c2 = FiniteGroup::cyclic(2);

inline Vec random_unit(const Algebra& a, std::mt19937_64& rng) {
  while (true) {
    Vec v(a.rank());
    for (auto& x : v) x = static_cast<Elem>(rng() % a.ring()->size());
    if (a.is_unit(v)) return v;
  }
}

/// X -> J X J^-1 with J = [[0,1],[-1,0]]: transpose of the inverse, up to
/// the determinant, extended linearly.
inline AlgebraMap cofactor_map(const AlgebraPtr& m2) { return AlgebraMap::inner(m2, {0, 1, 2, 0}); }

struct Roster {
  std::string name;
  CollectiveCharacter phi;
};

inline std::vector<Roster> roster(std::mt19937_64& rng) {
  std::vector<Roster> out;
  auto k = f9();
  auto frob = frobenius_type(k, 3, 2);
  auto f9base = Algebra::base_ring(k);
  out.push_back({"F_9 Galois", CollectiveCharacter::trivial(f9base, frob)});

  auto f3 = FiniteCommRing::modular(3);
  auto m2 = Algebra::matrix_algebra(2, f3);
  out.push_back({"M_2(F_3) cofactor", CollectiveCharacter::make(m2, {AlgebraMap::identity(m2), cofactor_map(m2)},
                                                                trivial_type(c2, f3))});

  auto m2b = Algebra::matrix_algebra(2, k);
  auto inner = AlgebraMap::inner(m2b, random_unit(*m2b, rng));
  auto eta = inner.compose(AlgebraMap::coefficientwise(m2b, frob->action()(1)));
  out.push_back({"M_2(F_9) twisted Frobenius", CollectiveCharacter::make(m2b, {AlgebraMap::identity(m2b), eta}, frob)});

  auto klein = FiniteGroup::direct_product(c2, c2);
  auto kt = trivial_type(klein, f3);
  auto d = AlgebraMap::inner(m2, {1, 0, 0, 2});
  auto j = cofactor_map(m2);
  out.push_back({"M_2(F_3) Klein", CollectiveCharacter::from_generators(klein, m2, {d, j}, kt)});

  auto z4 = trivial_type(FiniteGroup::cyclic(4), z5());
  auto m2z = Algebra::matrix_algebra(2, FiniteCommRing::modular(5));
  out.push_back({"M_2(Z/5) cyclic 4",
                 CollectiveCharacter::from_generators(FiniteGroup::cyclic(4), m2z,
                                                      {AlgebraMap::inner(m2z, {0, 1, 2, 0})}, z4)});
  return out;
}

}  // namespace fixtures
