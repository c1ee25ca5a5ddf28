#include <random>

#include "cliffordsys/em_order.hpp"
#include "doctest.h"

using namespace cliffordsys;

namespace {

HElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> idx(-6, 6), ex(-5, 5), jd(-3, 3), count(0, 4);
  HElement h = HElement::w(jd(rng));
  for (long k = count(rng); k > 0; --k) h = h_mul(h, HElement::p(idx(rng), ex(rng)));
  return h;
}

bool gt(const HElement& a, const HElement& b) { return h_cmp(a, b) > 0; }

}  // namespace

TEST_CASE("group law") {
  auto p0 = HElement::p(0), p1 = HElement::p(1), w = HElement::w();
  CHECK(h_mul(h_mul(w, p0), h_inv(w)) == HElement::p(2));
  CHECK(h_mul(p0, p1) == h_mul(p1, p0));
  CHECK(h_mul(p0, h_inv(p0)) == HElement{});
  CHECK(HElement::p(3, 0) == HElement{});
  CHECK(h_mul(HElement::p(1, 2), HElement::p(1, -2)).t.empty());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK(h_mul(h_mul(a, b), c) == h_mul(a, h_mul(b, c)));
    CHECK(h_mul(a, h_inv(a)) == HElement{});
    CHECK(h_mul(h_inv(a), a) == HElement{});
    for (auto [k, e] : h_mul(a, b).t) CHECK(e != 0);
  }
}

TEST_CASE("order examples") {
  const HElement e;
  CHECK(gt(HElement::p(0), e));
  CHECK(gt(HElement::w(), HElement::p(5, 100)));
  CHECK(gt(h_mul(HElement::p(1), HElement::p(0, -1)), e));
  CHECK(gt(h_mul(h_mul(HElement::p(0, -1), HElement::p(1, -1)), HElement::p(2)), e));
  CHECK(h_cmp(e, e) == 0);
  CHECK(gt(e, HElement::p(-3)) == false);
}

TEST_CASE("order properties on random samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    auto ab = h_cmp(a, b);
    CHECK((ab == 0) == (a == b));
    CHECK(h_cmp(b, a) == (0 <=> ab));
    CHECK_FALSE(gt(a, a));
    if (gt(a, b) && gt(b, c)) CHECK(gt(a, c));
    if (gt(a, b)) {
      CHECK(gt(h_mul(c, a), h_mul(c, b)));
      CHECK(gt(h_mul(a, c), h_mul(b, c)));
      for (long i = -3; i <= 3; ++i) CHECK(gt(shift(a, i), shift(b, i)));
    }
  }
}

TEST_CASE("formatting") {
  CHECK(HElement{}.to_string() == "e");
  CHECK(h_mul(HElement::p(0, 2), HElement::w()).to_string() == "p0^2 w");
  CHECK(HElement::w(-1).to_string() == "w^-1");
}
