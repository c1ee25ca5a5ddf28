#include "cliffordsys/abelian.hpp"

#include <sstream>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

long mod(long a, long m) {
  if (m == 0) return a;
  long r = a % m;
  return r < 0 ? r + m : r;
}

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

AbelianGroup::AbelianGroup(std::vector<long> invariant_factors) : factors_(std::move(invariant_factors)) {
  long prev = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long d = factors_[i];
    if (d < 0) throw Error(ErrorKind::InvalidArgument, "negative invariant factor");
    if (d == 1) throw Error(ErrorKind::InvalidArgument, "trivial invariant factor 1 is not stored");
    if (d == 0) {
      prev = 0;
      continue;
    }
    if (prev == 0) throw Error(ErrorKind::InvalidArgument, "finite factor after an infinite one");
    if (d % prev != 0)
      throw Error(ErrorKind::InvalidArgument, "invariant factors must form a divisibility chain",
                  std::to_string(prev) + " !| " + std::to_string(d));
    prev = d;
  }
}

bool AbelianGroup::is_finite() const {
  for (long d : factors_)
    if (d == 0) return false;
  return true;
}

std::uint64_t AbelianGroup::order() const {
  std::uint64_t n = 1;
  for (long d : factors_) {
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "infinite group has no finite order");
    n *= static_cast<std::uint64_t>(d);
  }
  return n;
}

Coords AbelianGroup::reduce(Coords x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], factors_[i]);
  return x;
}

Coords AbelianGroup::add(const Coords& a, const Coords& b) const {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + b[i], factors_[i]);
  return r;
}

Coords AbelianGroup::sub(const Coords& a, const Coords& b) const {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] - b[i], factors_[i]);
  return r;
}

Coords AbelianGroup::neg(const Coords& a) const {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(-a[i], factors_[i]);
  return r;
}

Coords AbelianGroup::scale(const Coords& a, long k) const {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(mod(a[i], factors_[i]) * mod(k, factors_[i]), factors_[i]);
  return r;
}

bool AbelianGroup::is_zero(const Coords& a) const {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mod(a[i], factors_[i]) != 0) return false;
  return true;
}

std::uint64_t AbelianGroup::index_of(const Coords& a) const {
  std::uint64_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += static_cast<std::uint64_t>(mod(a[i], factors_[i])) * stride;
    stride *= static_cast<std::uint64_t>(factors_[i]);
  }
  return idx;
}

Coords AbelianGroup::element(std::uint64_t index) const {
  Coords x(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    auto d = static_cast<std::uint64_t>(factors_[i]);
    x[i] = static_cast<long>(index % d);
    index /= d;
  }
  return x;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " + ";
    if (factors_[i] == 0)
      os << "Z";
    else
      os << "Z/" << factors_[i];
  }
  return os.str();
}

GModule::GModule(FiniteGroup g, AbelianGroup a, std::vector<std::vector<long>> matrices)
    : group_(std::move(g)), module_(std::move(a)), matrices_(std::move(matrices)) {}

GModulePtr GModule::trivial(const FiniteGroup& g, const AbelianGroup& a) {
  const std::size_t r = a.rank();
  std::vector<long> id(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) id[i * r + i] = 1;
  std::vector<std::vector<long>> m(static_cast<std::size_t>(g.order()), id);
  return GModulePtr(new GModule(g, a, std::move(m)));
}

Coords GModule::act(int g, const Coords& x) const {
  const std::size_t r = rank();
  const auto& m = matrices_[static_cast<std::size_t>(g)];
  Coords y(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    long s = 0;
    const long d = module_.factors()[i];
    for (std::size_t j = 0; j < r; ++j) {
      if (x[j] == 0) continue;
      s = (s + m[i * r + j] * x[j]) % d;
    }
    y[i] = s < 0 ? s + d : s;
  }
  return y;
}

bool GModule::is_trivial() const {
  const std::size_t r = rank();
  for (int g = 0; g < group_.order(); ++g)
    for (std::size_t j = 0; j < r; ++j) {
      Coords e(r, 0);
      e[j] = 1;
      if (act(g, e) != module_.reduce(e)) return false;
    }
  return true;
}

GModulePtr GModule::from_matrices(const FiniteGroup& g, const AbelianGroup& a,
                                  std::vector<std::vector<long>> matrices) {
  if (!a.is_finite()) throw Error(ErrorKind::InvalidArgument, "G-modules must be finite");
  const std::size_t r = a.rank();
  if (matrices.size() != static_cast<std::size_t>(g.order()))
    throw Error(ErrorKind::InvalidArgument, "need one matrix per group element");
  for (auto& m : matrices) {
    if (m.size() != r * r) throw Error(ErrorKind::InvalidArgument, "action matrix has wrong size");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m[i * r + j] = mod(m[i * r + j], a.factors()[i]);
  }
  // Column j must be killed by d_j for the map to be well defined.
  for (int x = 0; x < g.order(); ++x) {
    const auto& m = matrices[static_cast<std::size_t>(x)];
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i)
        if (mod(m[i * r + j] * a.factors()[j], a.factors()[i]) != 0)
          throw Error(ErrorKind::NotCompatible, "action matrix is not a homomorphism of the module",
                      "element " + std::to_string(x));
  }
  GModulePtr mod_ptr(new GModule(g, a, std::move(matrices)));
  for (std::size_t j = 0; j < r; ++j) {
    Coords e(r, 0);
    e[j] = 1;
    e = a.reduce(e);
    if (mod_ptr->act(FiniteGroup::identity, e) != e)
      throw Error(ErrorKind::NotCompatible, "identity does not act trivially", pair_str(0, 0));
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        if (mod_ptr->act(x, mod_ptr->act(y, e)) != mod_ptr->act(g.mul(x, y), e))
          throw Error(ErrorKind::NotCompatible, "matrices do not compose along the group law", pair_str(x, y));
  }
  return mod_ptr;
}

GModulePtr GModule::from_generator_images(const FiniteGroup& g, const AbelianGroup& a,
                                          const std::vector<std::vector<long>>& images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size()) throw Error(ErrorKind::InvalidArgument, "need one image per generator");
  const std::size_t r = a.rank();
  auto compose = [&](const std::vector<long>& p, const std::vector<long>& q) {
    std::vector<long> out(r * r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < r; ++k) s = mod(s + p[i * r + k] * q[k * r + j], a.factors()[i]);
        out[i * r + j] = s;
      }
    return out;
  };
  std::vector<std::vector<long>> mats(static_cast<std::size_t>(g.order()));
  std::vector<long> id(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) id[i * r + i] = 1;
  mats[0] = id;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int y = g.mul(x, gens[s]);
      auto cand = compose(mats[static_cast<std::size_t>(x)], images[s]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        mats[static_cast<std::size_t>(y)] = std::move(cand);
        queue.push_back(y);
      } else if (mats[static_cast<std::size_t>(y)] != cand) {
        throw Error(ErrorKind::NotCompatible, "generator images violate a group relation", pair_str(x, gens[s]));
      }
    }
  }
  return from_matrices(g, a, std::move(mats));
}

std::string GModule::to_string() const {
  return module_.to_string() + (is_trivial() ? " (trivial action)" : " (twisted action)");
}

}  // namespace cliffordsys
