#include "cliffordsys/em_order.hpp"

namespace cliffordsys {

namespace {

void add_to(std::map<long, long>& t, long index, long e) {
  if (e == 0) return;
  auto [it, inserted] = t.emplace(index, e);
  if (!inserted && (it->second += e) == 0) t.erase(it);
}

}  // namespace

HElement HElement::p(long i, long e) {
  HElement h;
  add_to(h.t, i, e);
  return h;
}

HElement HElement::w(long e) {
  HElement h;
  h.j = e;
  return h;
}

std::string HElement::to_string() const {
  std::string out;
  for (auto [i, e] : t) {
    if (!out.empty()) out += " ";
    out += "p" + std::to_string(i) + (e == 1 ? "" : "^" + std::to_string(e));
  }
  if (j != 0) out += (out.empty() ? "" : " ") + std::string("w") + (j == 1 ? "" : "^" + std::to_string(j));
  return out.empty() ? "e" : out;
}

HElement shift(const HElement& a, long i) {
  HElement out;
  out.j = a.j;
  for (auto [k, e] : a.t) out.t.emplace(k + 2 * i, e);
  return out;
}

HElement h_mul(const HElement& a, const HElement& b) {
  HElement out = a;
  for (auto [k, e] : b.t) add_to(out.t, k + 2 * a.j, e);
  out.j = a.j + b.j;
  return out;
}

HElement h_inv(const HElement& a) {
  // (x, i)^-1 = (-shift_{-2i}(x), -i)
  HElement out;
  out.j = -a.j;
  for (auto [k, e] : a.t) out.t.emplace(k - 2 * a.j, -e);
  return out;
}

std::strong_ordering h_cmp(const HElement& a, const HElement& b) {
  if (a.j != b.j) return a.j <=> b.j;
  std::map<long, long> diff = a.t;
  for (auto [k, e] : b.t) add_to(diff, k, -e);
  if (diff.empty()) return std::strong_ordering::equal;
  return diff.rbegin()->second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace cliffordsys
