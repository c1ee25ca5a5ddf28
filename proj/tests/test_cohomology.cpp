#include <random>

#include "cliffordsys/action.hpp"
#include "cliffordsys/cohomology.hpp"
#include "cliffordsys/error.hpp"
#include "cohomology_oracle.hpp"
#include "doctest.h"

using namespace cliffordsys;

namespace {

GModulePtr trivial_cyclic(int g, long m) {
  return GModule::trivial(FiniteGroup::cyclic(g), AbelianGroup({m}));
}

std::vector<long> h(const GModulePtr& m, int n) { return Cohomology::compute(m, n).factors(); }

}  // namespace

TEST_CASE("coboundary examples") {
  auto m = trivial_cyclic(2, 4);
  for (int n = 0; n <= 3; ++n) CHECK(coboundary(Cochain(m, n)).is_zero());
  Cochain c(m, 1);
  c.set(std::vector<int>{1}, {1});
  auto d = coboundary(c);
  // c(s) + c(s) - c(e) with c(e) = 0
  CHECK(d.at(std::vector<int>{1, 1}) == Coords{2});
  CHECK(coboundary(d).is_zero());
}

TEST_CASE("is_cocycle examples") {
  auto units = GModule::trivial(FiniteGroup::cyclic(2), AbelianGroup({4}));  // (Z/5)^* = Z/4
  CHECK(is_cocycle(Cochain(units, 2)).ok);
  Cochain a(units, 2);
  a.set(std::vector<int>{1, 1}, {1});  // log of 2
  CHECK(is_cocycle(a).ok);

  // degree 2 over Z/3 with one arbitrary table; compare with a scan of all
  // triples done here
  auto m3 = GModule::trivial(FiniteGroup::cyclic(3), AbelianGroup({3}));
  Cochain c(m3, 2);
  c.set(std::vector<int>{1, 1}, {1});
  c.set(std::vector<int>{1, 2}, {2});
  c.set(std::vector<int>{2, 1}, {0});
  c.set(std::vector<int>{2, 2}, {1});
  std::vector<int> first_bad;
  auto val = [&](int x, int y) { return (x == 0 || y == 0) ? 0L : c.at(std::vector<int>{x, y})[0]; };
  for (int x = 1; x < 3 && first_bad.empty(); ++x)
    for (int y = 1; y < 3 && first_bad.empty(); ++y)
      for (int z = 1; z < 3 && first_bad.empty(); ++z) {
        long lhs = val(y, z) - val((x + y) % 3, z) + val(x, (y + z) % 3) - val(x, y);
        if (((lhs % 3) + 3) % 3 != 0) first_bad = {x, y, z};
      }
  REQUIRE_FALSE(first_bad.empty());
  auto chk = is_cocycle(c);
  CHECK_FALSE(chk.ok);
  CHECK(chk.witness == first_bad);
}

TEST_CASE("cohomology examples") {
  CHECK(h(trivial_cyclic(2, 2), 2) == std::vector<long>{2});
  CHECK(h(trivial_cyclic(2, 3), 2).empty());
  CHECK(h(trivial_cyclic(2, 2), 3) == std::vector<long>{2});
  CHECK(h(trivial_cyclic(3, 3), 1) == std::vector<long>{3});

  auto f9 = FiniteCommRing::field(3, {1, 0, 1});
  UnitModule km(RingAction::frobenius(f9, 3, 2));
  CHECK(h(km.module(), 2).empty());

  auto big = GModule::trivial(FiniteGroup::cyclic(30), AbelianGroup({2}));
  CHECK_THROWS_AS(Cohomology::compute(big, 3), Error);
}

TEST_CASE("solve_coboundary examples") {
  auto units = GModule::trivial(FiniteGroup::cyclic(2), AbelianGroup({4}));  // (Z/5)^*, generator 2
  Cochain one(units, 2);
  auto c0 = solve_coboundary(one, one);
  REQUIRE(c0);
  CHECK(coboundary(*c0).is_zero());

  Cochain four(units, 2);
  four.set(std::vector<int>{1, 1}, {2});  // 4 = 2^2
  auto c = solve_coboundary(four, one);
  REQUIRE(c);
  // c(s) must be +-2, i.e. log 1 or 3
  long v = c->at(std::vector<int>{1})[0];
  CHECK((v == 1 || v == 3));
  CHECK(coboundary(*c) == four - one);

  Cochain two(units, 2);
  two.set(std::vector<int>{1, 1}, {1});
  CHECK_FALSE(solve_coboundary(two, one));

  Cochain bad(GModule::trivial(FiniteGroup::cyclic(3), AbelianGroup({3})), 2);
  bad.set(std::vector<int>{1, 1}, {1});
  Cochain zero3(bad.module(), 2);
  CHECK_THROWS_AS(solve_coboundary(bad, zero3), Error);
}

TEST_CASE("d o d vanishes on random cochains") {
  std::mt19937_64 rng(11);
  std::vector<GModulePtr> mods{trivial_cyclic(4, 4),
                               GModule::from_generator_images(FiniteGroup::cyclic(4), AbelianGroup({4}), {{3}}),
                               GModule::from_generator_images(FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                                          FiniteGroup::cyclic(2)),
                                                              AbelianGroup({2, 2}), {{0, 1, 1, 0}, {1, 0, 0, 1}})};
  for (const auto& m : mods)
    for (int n = 0; n <= 2; ++n)
      for (int trial = 0; trial < 50; ++trial) {
        Cochain c(m, n);
        for (std::size_t p = 0; p < c.positions(); ++p) {
          Coords v(m->rank());
          for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long>(rng() % 8);
          c.set_value(p, v);
        }
        CHECK(coboundary(coboundary(c)).is_zero());
      }
}

TEST_CASE("representatives are cocycles in distinct classes") {
  auto klein = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  auto m = GModule::trivial(klein, AbelianGroup({2}));
  for (int n = 1; n <= 3; ++n) {
    auto hn = Cohomology::compute(m, n);
    CHECK(hn.factors().size() == static_cast<std::size_t>(n + 1));
    const auto& reps = hn.representatives();
    CoboundarySolver solver(m, n);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(is_cocycle(reps[i]).ok);
      auto cls = hn.class_of(reps[i]);
      for (std::size_t j = 0; j < cls.size(); ++j) CHECK(cls[j] == (i == j ? 1 : 0));
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(solver.solve(reps[i], reps[j]));
    }
  }
}

TEST_CASE("oracle agreement on a sample") {
  // the full roster runs in the acceptance suite
  auto table = oracle::cyclic_table(4);
  auto g = FiniteGroup::from_table(table);
  for (const auto& mats : oracle::all_actions(table, {4})) {
    auto lib = GModule::from_matrices(g, AbelianGroup({4}), mats);
    oracle::Engine eng(table, oracle::make_module({4}, mats));
    for (int n = 1; n <= 3; ++n) CHECK(Cohomology::compute(lib, n).factors() == eng.invariant_factors(n));
  }
}
