#include "cliffordsys/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 26;

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(std::uint64_t n) {
  std::vector<long> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(static_cast<long>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(static_cast<long>(n));
  return out;
}

long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) return -1;
  return mod(x, m);
}

// Remainder of a modulo monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, long p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    long c = mod(a.back(), p);
    if (c != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

std::string poly_to_string(const Poly& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = f.size(); k-- > 0;) {
    long c = f[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

FiniteCommRing::Component FiniteCommRing::make_field_component(long p, const Poly& f_in) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "field characteristic must be prime", std::to_string(p));
  Poly f = f_in;
  for (auto& c : f) c = mod(c, p);
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) throw Error(ErrorKind::InvalidArgument, "field polynomial must have degree at least 1");
  if (f.back() != 1) throw Error(ErrorKind::InvalidArgument, "field polynomial must be monic", poly_to_string(f));
  const int d = static_cast<int>(f.size()) - 1;

  // Exhaustive factor search over monic polynomials of degree <= d/2.
  for (int e = 1; e <= d / 2; ++e) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(static_cast<std::size_t>(e) + 1, 0);
      std::uint64_t t = v;
      for (int i = 0; i < e; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<long>(t % static_cast<std::uint64_t>(p));
        t /= static_cast<std::uint64_t>(p);
      }
      g[static_cast<std::size_t>(e)] = 1;
      Poly r = poly_rem(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](long c) { return c == 0; }))
        throw Error(ErrorKind::NotIrreducible, "polynomial " + poly_to_string(f) + " is reducible over F_" +
                                                   std::to_string(p),
                    poly_to_string(g));
    }
  }

  Component c;
  c.field = true;
  c.modulus = p;
  c.degree = d;
  c.poly = f;
  c.size = 1;
  for (int i = 0; i < d; ++i) c.size *= static_cast<std::uint64_t>(p);
  if (c.size > kMaxRingSize) throw Error(ErrorKind::TooLarge, "field too large", std::to_string(c.size));

  auto to_poly = [&](Elem v) {
    Poly a(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      a[static_cast<std::size_t>(i)] = static_cast<long>(v % static_cast<Elem>(p));
      v /= static_cast<Elem>(p);
    }
    return a;
  };
  auto from_poly = [&](const Poly& a) {
    Elem v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * static_cast<Elem>(p) + static_cast<Elem>(a[i]);
    return v;
  };
  auto mulmod = [&](Elem x, Elem y) {
    Poly a = to_poly(x), b = to_poly(y);
    Poly prod(2 * static_cast<std::size_t>(d) - 1, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        prod[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    for (auto& v : prod) v = mod(v, p);
    Poly r = poly_rem(prod, f, p);
    r.resize(static_cast<std::size_t>(d), 0);
    return from_poly(r);
  };
  auto powmod = [&](Elem x, std::uint64_t e) {
    Elem r = 1, b = x;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };

  const std::uint64_t q1 = c.size - 1;
  const auto primes = prime_factors(q1);
  Elem gen = 0;
  for (Elem cand = 1; cand < c.size && gen == 0; ++cand) {
    bool primitive = true;
    for (long r : primes)
      if (powmod(cand, q1 / static_cast<std::uint64_t>(r)) == 1) {
        primitive = false;
        break;
      }
    if (primitive) gen = cand;
  }
  if (gen == 0 && q1 == 1) gen = 1;
  c.exp_table.resize(q1);
  c.log_table.assign(c.size, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < q1; ++i) {
    c.exp_table[i] = x;
    c.log_table[x] = static_cast<Elem>(i);
    x = mulmod(x, gen);
  }
  if (x != 1) throw InternalError("primitive element search failed");
  return c;
}

void FiniteCommRing::finalize(std::string name, std::string signature) {
  size_ = 1;
  for (auto& c : components_) {
    c.stride = size_;
    size_ *= c.size;
    if (size_ > kMaxRingSize) throw Error(ErrorKind::TooLarge, "ring too large", std::to_string(size_));
  }
  one_ = 0;
  coord_moduli_.clear();
  additive_basis_.clear();
  characteristic_ = 1;
  for (const auto& c : components_) {
    one_ += static_cast<Elem>(c.stride);
    std::uint64_t s = c.stride;
    for (int i = 0; i < c.degree; ++i) {
      coord_moduli_.push_back(c.modulus);
      additive_basis_.push_back(static_cast<Elem>(s));
      s *= static_cast<std::uint64_t>(c.modulus);
    }
    characteristic_ = std::lcm(characteristic_, c.modulus);
  }
  is_field_ = components_.size() == 1 && (components_[0].field || is_prime(components_[0].modulus));
  name_ = std::move(name);
  signature_ = std::move(signature);

  // Default k: the prime ring Z.1.
  subring_member_.assign(size_, 0);
  subring_.clear();
  for (long n = 0; n < characteristic_; ++n) {
    Elem e = from_int(n);
    if (!subring_member_[e]) {
      subring_member_[e] = 1;
      subring_.push_back(e);
    }
  }
  std::sort(subring_.begin(), subring_.end());
}

RingPtr FiniteCommRing::modular(long m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2", std::to_string(m));
  auto r = std::shared_ptr<FiniteCommRing>(new FiniteCommRing());
  Component c;
  c.modulus = m;
  c.size = static_cast<std::uint64_t>(m);
  r->components_.push_back(c);
  r->finalize("Z/" + std::to_string(m), "mod:" + std::to_string(m));
  return r;
}

RingPtr FiniteCommRing::field(long p, Poly f) {
  auto r = std::shared_ptr<FiniteCommRing>(new FiniteCommRing());
  r->components_.push_back(make_field_component(p, f));
  const auto& c = r->components_[0];
  std::ostringstream sig;
  sig << "field:" << p;
  for (long v : c.poly) sig << ":" << v;
  r->finalize("F_" + std::to_string(c.size), sig.str());
  return r;
}

RingPtr FiniteCommRing::product(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "empty product of rings");
  auto r = std::shared_ptr<FiniteCommRing>(new FiniteCommRing());
  std::string name, sig = "prod(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& c : factors[i]->components_) r->components_.push_back(c);
    name += (i ? " x " : "") + factors[i]->name();
    sig += (i ? "," : "") + factors[i]->signature();
  }
  r->finalize(name, sig + ")");
  return r;
}

RingPtr FiniteCommRing::with_subring(const std::vector<Elem>& members) const {
  auto r = std::make_shared<FiniteCommRing>(*this);
  r->subring_member_.assign(size_, 0);
  for (Elem e : members) {
    if (e >= size_) throw Error(ErrorKind::InvalidArgument, "subring member out of range", std::to_string(e));
    r->subring_member_[e] = 1;
  }
  r->subring_.clear();
  for (Elem e = 0; e < size_; ++e)
    if (r->subring_member_[e]) r->subring_.push_back(e);
  const auto& k = r->subring_;
  auto pair = [&](Elem a, Elem b) { return "(" + element_to_string(a) + ", " + element_to_string(b) + ")"; };
  if (!r->subring_member_[0]) throw Error(ErrorKind::NotASubring, "subring must contain 0", "0");
  if (!r->subring_member_[one_]) throw Error(ErrorKind::NotASubring, "subring must contain 1", element_to_string(one_));
  if (k.size() != size_) {
    for (Elem a : k) {
      if (!r->subring_member_[neg(a)]) throw Error(ErrorKind::NotASubring, "not closed under negation", pair(a, a));
      for (Elem b : k) {
        if (!r->subring_member_[add(a, b)]) throw Error(ErrorKind::NotASubring, "not closed under addition", pair(a, b));
        if (!r->subring_member_[mul(a, b)])
          throw Error(ErrorKind::NotASubring, "not closed under multiplication", pair(a, b));
      }
    }
  }
  std::ostringstream sig;
  sig << signature_ << "/k";
  if (k.size() == size_)
    sig << "=K";
  else
    for (Elem e : k) sig << ":" << e;
  r->signature_ = sig.str();
  return r;
}

RingPtr FiniteCommRing::with_subfield_of_order(std::uint64_t q) const {
  if (!is_field_) throw Error(ErrorKind::NotAField, "subfield lookup needs a field", name_);
  std::vector<Elem> members;
  for (Elem x = 0; x < size_; ++x)
    if (pow(x, q) == x) members.push_back(x);
  if (members.size() != q)
    throw Error(ErrorKind::InvalidArgument, "no subfield of order " + std::to_string(q) + " in " + name_);
  return with_subring(members);
}

Elem FiniteCommRing::from_int(long n) const {
  Elem out = 0;
  for (const auto& c : components_) out += static_cast<Elem>(mod(n, c.modulus)) * static_cast<Elem>(c.stride);
  return out;
}

Elem FiniteCommRing::comp_add(const Component& c, Elem a, Elem b, bool subtract) const {
  if (!c.field || c.degree == 1) {
    long m = c.modulus;
    return static_cast<Elem>(subtract ? mod(static_cast<long>(a) - static_cast<long>(b), m)
                                      : (static_cast<long>(a) + static_cast<long>(b)) % m);
  }
  if (c.modulus == 2) return a ^ b;
  const Elem p = static_cast<Elem>(c.modulus);
  Elem out = 0, place = 1;
  for (int i = 0; i < c.degree; ++i) {
    Elem da = a % p, db = b % p;
    Elem d = subtract ? (da + p - db) % p : (da + db) % p;
    out += d * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return out;
}

Elem FiniteCommRing::comp_mul(const Component& c, Elem a, Elem b) const {
  if (!c.field) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % static_cast<std::uint64_t>(c.modulus));
  if (a == 0 || b == 0) return 0;
  const std::uint64_t q1 = c.size - 1;
  return c.exp_table[(static_cast<std::uint64_t>(c.log_table[a]) + c.log_table[b]) % q1];
}

Elem FiniteCommRing::add(Elem a, Elem b) const {
  if (components_.size() == 1) return comp_add(components_[0], a, b, false);
  Elem out = 0;
  for (std::size_t i = 0; i < components_.size(); ++i)
    out += comp_add(components_[i], component_value(a, i), component_value(b, i), false) *
           static_cast<Elem>(components_[i].stride);
  return out;
}

Elem FiniteCommRing::sub(Elem a, Elem b) const {
  if (components_.size() == 1) return comp_add(components_[0], a, b, true);
  Elem out = 0;
  for (std::size_t i = 0; i < components_.size(); ++i)
    out += comp_add(components_[i], component_value(a, i), component_value(b, i), true) *
           static_cast<Elem>(components_[i].stride);
  return out;
}

Elem FiniteCommRing::neg(Elem a) const { return sub(0, a); }

Elem FiniteCommRing::mul(Elem a, Elem b) const {
  if (components_.size() == 1) return comp_mul(components_[0], a, b);
  Elem out = 0;
  for (std::size_t i = 0; i < components_.size(); ++i)
    out += comp_mul(components_[i], component_value(a, i), component_value(b, i)) *
           static_cast<Elem>(components_[i].stride);
  return out;
}

Elem FiniteCommRing::pow(Elem a, std::uint64_t e) const {
  Elem r = one_, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool FiniteCommRing::is_unit(Elem a) const {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    Elem v = component_value(a, i);
    const auto& c = components_[i];
    if (c.field ? v == 0 : std::gcd(static_cast<long>(v), c.modulus) != 1) return false;
  }
  return true;
}

Elem FiniteCommRing::inv(Elem a) const {
  if (!is_unit(a)) throw Error(ErrorKind::InvalidArgument, "element is not a unit", element_to_string(a));
  Elem out = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    Elem v = component_value(a, i), w;
    if (c.field) {
      const std::uint64_t q1 = c.size - 1;
      w = c.exp_table[(q1 - c.log_table[v]) % q1];
    } else {
      w = static_cast<Elem>(inverse_mod(static_cast<long>(v), c.modulus));
    }
    out += w * static_cast<Elem>(c.stride);
  }
  return out;
}

std::vector<long> FiniteCommRing::coords(Elem a) const {
  std::vector<long> out;
  out.reserve(coord_moduli_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    Elem v = component_value(a, i);
    for (int d = 0; d < components_[i].degree; ++d) {
      out.push_back(static_cast<long>(v % static_cast<Elem>(components_[i].modulus)));
      v /= static_cast<Elem>(components_[i].modulus);
    }
  }
  return out;
}

Elem FiniteCommRing::from_coords(const std::vector<long>& c) const {
  if (c.size() != coord_moduli_.size())
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(coord_moduli_.size()) + " coordinates");
  Elem out = 0;
  for (std::size_t i = 0; i < c.size(); ++i) out += static_cast<Elem>(mod(c[i], coord_moduli_[i])) * additive_basis_[i];
  return out;
}

std::uint64_t FiniteCommRing::unit_count() const {
  std::uint64_t n = 1;
  for (const auto& c : components_) {
    if (c.field) {
      n *= c.size - 1;
    } else {
      std::uint64_t phi = 0;
      for (long v = 0; v < c.modulus; ++v)
        if (std::gcd(v, c.modulus) == 1) ++phi;
      n *= phi;
    }
  }
  return n;
}

bool FiniteCommRing::subring_is_prime_ring() const {
  return subring_.size() == static_cast<std::size_t>(characteristic_);
}

std::string FiniteCommRing::element_to_string(Elem a) const {
  std::ostringstream os;
  auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  return os.str();
}

// --- automorphisms -------------------------------------------------------

RingAutomorphism RingAutomorphism::identity(RingPtr k) {
  RingAutomorphism a;
  a.table_.resize(k->size());
  std::iota(a.table_.begin(), a.table_.end(), Elem{0});
  a.basis_images_ = k->additive_basis();
  a.ring_ = std::move(k);
  return a;
}

RingAutomorphism RingAutomorphism::validated(RingPtr ring, std::vector<Elem> table) {
  const auto& K = *ring;
  auto show = [&](Elem a, Elem b) { return "(" + K.element_to_string(a) + ", " + K.element_to_string(b) + ")"; };
  const auto& basis = K.additive_basis();
  for (Elem a : basis)
    for (Elem b : basis)
      if (table[K.mul(a, b)] != K.mul(table[a], table[b]))
        throw Error(ErrorKind::NotAutomorphism, "map is not multiplicative", show(a, b));
  if (table[K.one()] != K.one())
    throw Error(ErrorKind::NotAutomorphism, "map does not fix 1", K.element_to_string(K.one()));
  std::vector<char> hit(K.size(), 0);
  for (Elem x = 0; x < K.size(); ++x) {
    if (hit[table[x]]) throw Error(ErrorKind::NotAutomorphism, "map is not injective", K.element_to_string(x));
    hit[table[x]] = 1;
  }
  for (Elem x : K.subring())
    if (table[x] != x) throw Error(ErrorKind::NotAutomorphism, "map moves an element of k", K.element_to_string(x));
  RingAutomorphism a;
  a.basis_images_.reserve(basis.size());
  for (Elem b : basis) a.basis_images_.push_back(table[b]);
  a.table_ = std::move(table);
  a.ring_ = std::move(ring);
  return a;
}

RingAutomorphism RingAutomorphism::from_basis_images(RingPtr ring, const std::vector<Elem>& images) {
  const auto& K = *ring;
  const auto& basis = K.additive_basis();
  if (images.size() != basis.size())
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(basis.size()) + " basis images, got " + std::to_string(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= K.size()) throw Error(ErrorKind::InvalidArgument, "basis image out of range");
    if (K.mul(K.from_int(K.coord_moduli()[i]), images[i]) != 0)
      throw Error(ErrorKind::NotAutomorphism, "image order does not divide the generator order",
                  K.element_to_string(basis[i]));
  }
  std::vector<Elem> table(K.size(), 0);
  std::vector<long> digits(K.num_coords(), 0);
  const auto& moduli = K.coord_moduli();
  for (Elem x = 1; x < K.size(); ++x) {
    // increment the mixed-radix counter; the lowest changed digit tells
    // which basis element was added
    std::size_t i = 0;
    while (digits[i] + 1 == moduli[i]) digits[i++] = 0;
    ++digits[i];
    table[x] = K.add(table[x - basis[i]], images[i]);
  }
  return validated(std::move(ring), std::move(table));
}

RingAutomorphism RingAutomorphism::from_function(RingPtr ring, const std::function<Elem(Elem)>& f) {
  const auto& K = *ring;
  std::vector<Elem> table(K.size());
  for (Elem x = 0; x < K.size(); ++x) {
    table[x] = f(x);
    if (table[x] >= K.size()) throw Error(ErrorKind::InvalidArgument, "function value out of range");
  }
  if (table[0] != 0) throw Error(ErrorKind::NotAutomorphism, "map is not additive", "(0, 0)");
  const auto& basis = K.additive_basis();
  std::vector<long> digits(K.num_coords(), 0);
  const auto& moduli = K.coord_moduli();
  for (Elem x = 1; x < K.size(); ++x) {
    std::size_t i = 0;
    while (digits[i] + 1 == moduli[i]) digits[i++] = 0;
    ++digits[i];
    // first nonzero digit of x is i only when all lower digits are zero,
    // which holds right after the increment
    Elem b = basis[i], rest = x - b;
    if (table[x] != K.add(table[rest], table[b]))
      throw Error(ErrorKind::NotAutomorphism, "map is not additive",
                  "(" + K.element_to_string(rest) + ", " + K.element_to_string(b) + ")");
  }
  return validated(std::move(ring), std::move(table));
}

RingAutomorphism RingAutomorphism::power_map(RingPtr ring, std::uint64_t q) {
  const FiniteCommRing* K = ring.get();
  return from_function(std::move(ring), [K, q](Elem x) { return K->pow(x, q); });
}

RingAutomorphism RingAutomorphism::compose(const RingAutomorphism& other) const {
  RingAutomorphism a;
  a.ring_ = ring_;
  a.table_.resize(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) a.table_[x] = table_[other.table_[x]];
  for (Elem b : ring_->additive_basis()) a.basis_images_.push_back(a.table_[b]);
  return a;
}

RingAutomorphism RingAutomorphism::inverse() const {
  RingAutomorphism a;
  a.ring_ = ring_;
  a.table_.resize(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) a.table_[table_[x]] = static_cast<Elem>(x);
  for (Elem b : ring_->additive_basis()) a.basis_images_.push_back(a.table_[b]);
  return a;
}

bool RingAutomorphism::is_identity() const {
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] != x) return false;
  return true;
}

// --- scalar restriction --------------------------------------------------

namespace {

// First nontrivial F_p-linear relation among the given digit vectors;
// returns its coefficients or an empty vector if independent.
std::vector<long> linear_relation(const std::vector<std::vector<long>>& vecs, long p) {
  const std::size_t n = vecs.size(), m = vecs.empty() ? 0 : vecs[0].size();
  // columns are vectors; augment with identity to track combinations
  std::vector<std::vector<long>> rows(n, std::vector<long>(m + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = mod(vecs[i][j], p);
    rows[i][m + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && rows[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[r], rows[piv]);
    long inv = inverse_mod(rows[r][col], p);
    for (auto& v : rows[r]) v = mod(v * inv, p);
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && rows[i][col] != 0) {
        long f = rows[i][col];
        for (std::size_t j = 0; j < m + n; ++j) rows[i][j] = mod(rows[i][j] - f * rows[r][j], p);
      }
    ++r;
  }
  if (r == n) return {};
  return std::vector<long>(rows[r].begin() + static_cast<long>(m), rows[r].end());
}

}  // namespace

ScalarRestriction restrict_to_subring(const RingPtr& big) {
  const auto& K = *big;
  const auto& k = K.subring();
  ScalarRestriction res;
  res.big = big;
  if (k.size() == K.size()) {
    res.small = big;
    res.embed.resize(K.size());
    std::iota(res.embed.begin(), res.embed.end(), Elem{0});
  } else if (k.size() == static_cast<std::size_t>(K.characteristic()) && K.subring_is_prime_ring()) {
    res.small = FiniteCommRing::modular(K.characteristic());
    res.embed.resize(k.size());
    for (long n = 0; n < K.characteristic(); ++n) res.embed[static_cast<std::size_t>(n)] = K.from_int(n);
  } else {
    const long p = K.characteristic();
    if (!std::all_of(K.coord_moduli().begin(), K.coord_moduli().end(), [p](long m) { return m == p; }) ||
        !is_prime(p))
      throw Error(ErrorKind::Unsupported, "subring k is not a field over a prime characteristic");
    for (Elem x : k)
      if (x != 0 && !K.is_unit(x)) throw Error(ErrorKind::Unsupported, "subring k is not a field");
    const std::uint64_t q1 = k.size() - 1;
    Elem gamma = 0;
    for (Elem x : k) {
      if (x == 0) continue;
      std::uint64_t ord = 1;
      for (Elem y = x; y != K.one(); y = K.mul(y, x)) ++ord;
      if (ord == q1) {
        gamma = x;
        break;
      }
    }
    if (gamma == 0) throw Error(ErrorKind::Unsupported, "subring k has no primitive element");
    std::vector<std::vector<long>> powers;
    Elem y = K.one();
    std::vector<long> rel;
    for (;;) {
      powers.push_back(K.coords(y));
      rel = linear_relation(powers, p);
      if (!rel.empty()) break;
      y = K.mul(y, gamma);
    }
    // normalize to a monic minimal polynomial
    long lead = rel.back();
    long linv = inverse_mod(lead, p);
    for (auto& c : rel) c = mod(c * linv, p);
    res.small = FiniteCommRing::field(p, rel);
    const auto& S = *res.small;
    res.embed.assign(S.size(), 0);
    for (Elem s = 0; s < S.size(); ++s) {
      auto c = S.coords(s);
      Elem v = 0, g = K.one();
      for (long ci : c) {
        v = K.add(v, K.mul(K.from_int(ci), g));
        g = K.mul(g, gamma);
      }
      res.embed[s] = v;
    }
    std::vector<Elem> sorted = res.embed;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != k) throw InternalError("subfield presentation does not match k");
  }

  // Greedy k-basis of K, seeded with 1.
  const auto& S = *res.small;
  const std::size_t q = S.size();
  std::vector<char> in_span(K.size(), 0);
  std::vector<Elem> span{0};
  std::vector<std::vector<Elem>> coords_of{std::vector<Elem>{}};
  in_span[0] = 1;
  for (std::uint64_t step = 0; span.size() < K.size(); ++step) {
    // 1 first, then the lowest index outside the span
    Elem cand = step == 0 ? K.one() : static_cast<Elem>(step - 1);
    if (step > K.size()) throw Error(ErrorKind::Unsupported, "K is not free over k");
    if (in_span[cand]) continue;
    std::vector<Elem> next;
    std::vector<std::vector<Elem>> next_coords;
    next.reserve(span.size() * q);
    for (Elem s = 0; s < q; ++s) {
      Elem m = K.mul(res.embed[s], cand);
      for (std::size_t i = 0; i < span.size(); ++i) {
        next.push_back(K.add(span[i], m));
        auto c = coords_of[i];
        c.push_back(s);
        next_coords.push_back(std::move(c));
      }
    }
    std::fill(in_span.begin(), in_span.end(), 0);
    for (Elem e : next) {
      if (in_span[e]) throw Error(ErrorKind::Unsupported, "K is not free over k", K.element_to_string(cand));
      in_span[e] = 1;
    }
    res.basis.push_back(cand);
    span = std::move(next);
    coords_of = std::move(next_coords);
  }
  const std::size_t n = res.basis.size();
  res.coordinates.assign(K.size() * n, 0);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t t = 0; t < n; ++t) res.coordinates[span[i] * n + t] = coords_of[i][t];
  return res;
}

}  // namespace cliffordsys
