#include "cliffordsys/algebra.hpp"

#include <sstream>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string pair_str(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || a->signature() == b->signature(); }

}  // namespace

AlgebraPtr Algebra::finish(Algebra a) {
  const std::size_t n = a.rank_;
  const auto& k = *a.ring_;
  if (n == 0 || n > kMaxAlgebraRank)
    throw Error(ErrorKind::TooLarge, "algebra rank must lie in 1.." + std::to_string(kMaxAlgebraRank),
                std::to_string(n));
  if (a.products_.size() != n * n) throw Error(ErrorKind::InvalidArgument, "structure constant table has wrong size");
  for (auto& v : a.products_) {
    if (v.size() != n) throw Error(ErrorKind::InvalidArgument, "structure constant vector has wrong length");
    for (auto& x : v)
      if (x >= k.size()) throw Error(ErrorKind::InvalidArgument, "coefficient outside the ring", std::to_string(x));
  }
  a.sparse_.assign(n * n, {});
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (std::size_t l = 0; l < n; ++l)
      if (a.products_[ij][l] != 0) a.sparse_[ij].emplace_back(l, a.products_[ij][l]);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vec left(n, 0), right(n, 0);
        for (auto [m, c] : a.sparse_[i * n + j])
          for (auto [r, d] : a.sparse_[m * n + l]) left[r] = k.add(left[r], k.mul(c, d));
        for (auto [m, c] : a.sparse_[j * n + l])
          for (auto [r, d] : a.sparse_[i * n + m]) right[r] = k.add(right[r], k.mul(c, d));
        if (left != right) throw Error(ErrorKind::NotAssociative, "(e_i e_j) e_l != e_i (e_j e_l)", triple(i, j, l));
      }

  if (a.unit_.empty()) {
    KMatrix sys(a.ring_, 2 * n * n, n);
    Vec rhs(2 * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t j = 0; j < n; ++j) {
          sys(i * n + l, j) = a.products_[j * n + i][l];
          sys(n * n + i * n + l, j) = a.products_[i * n + j][l];
        }
        if (i == l) rhs[i * n + l] = rhs[n * n + i * n + l] = k.one();
      }
    auto u = sys.solve(rhs);
    if (!u) throw Error(ErrorKind::NoUnit, "no two-sided identity element");
    a.unit_ = *u;
  }
  if (a.unit_.size() != n) throw Error(ErrorKind::InvalidArgument, "unit vector has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = a.basis(i);
    if (a.mul(a.unit_, e) != e || a.mul(e, a.unit_) != e)
      throw Error(ErrorKind::NoUnit, "given unit is not a two-sided identity", "e_" + std::to_string(i));
  }
  return std::shared_ptr<const Algebra>(new Algebra(std::move(a)));
}

AlgebraPtr Algebra::from_constants(RingPtr ring, std::size_t rank, std::vector<Vec> products, Vec unit,
                                   std::string name) {
  Algebra a;
  a.ring_ = std::move(ring);
  a.rank_ = rank;
  a.products_ = std::move(products);
  a.unit_ = std::move(unit);
  a.name_ = std::move(name);
  return finish(std::move(a));
}

AlgebraPtr Algebra::base_ring(RingPtr ring) {
  Elem one = ring->one();
  std::string name = ring->name();
  return from_constants(std::move(ring), 1, {Vec{one}}, Vec{one}, std::move(name));
}

AlgebraPtr Algebra::matrix_algebra(std::size_t n, RingPtr ring) {
  const std::size_t r = n * n;
  std::vector<Vec> prod(r * r, Vec(r, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) prod[(i * n + j) * r + (j * n + l)][i * n + l] = ring->one();
  Vec unit(r, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = ring->one();
  std::string name = "M_" + std::to_string(n) + "(" + ring->name() + ")";
  return from_constants(std::move(ring), r, std::move(prod), std::move(unit), std::move(name));
}

AlgebraPtr Algebra::group_algebra(const FiniteGroup& g, RingPtr ring) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vec> prod(n * n, Vec(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      prod[a * n + b][static_cast<std::size_t>(g.mul(static_cast<int>(a), static_cast<int>(b)))] = ring->one();
  Vec unit(n, 0);
  unit[0] = ring->one();
  std::string name = ring->name() + "[" + g.name() + "]";
  return from_constants(std::move(ring), n, std::move(prod), std::move(unit), std::move(name));
}

AlgebraPtr Algebra::opposite(const Algebra& a) {
  const std::size_t n = a.rank_;
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.product(j, i);
  return from_constants(a.ring_, n, std::move(prod), a.unit_, a.name_ + "^op");
}

AlgebraPtr Algebra::direct_product(const Algebra& a, const Algebra& b) {
  if (!same_ring(a.ring_, b.ring_)) throw Error(ErrorKind::TypeMismatch, "direct product over different rings");
  const std::size_t na = a.rank_, nb = b.rank_, n = na + nb;
  std::vector<Vec> prod(n * n, Vec(n, 0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t l = 0; l < na; ++l) prod[i * n + j][l] = a.product(i, j)[l];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t l = 0; l < nb; ++l) prod[(na + i) * n + na + j][na + l] = b.product(i, j)[l];
  Vec unit(a.unit_);
  unit.insert(unit.end(), b.unit_.begin(), b.unit_.end());
  return from_constants(a.ring_, n, std::move(prod), std::move(unit), a.name_ + " x " + b.name_);
}

AlgebraPtr Algebra::tensor(const Algebra& a, const Algebra& b) {
  if (!same_ring(a.ring_, b.ring_)) throw Error(ErrorKind::TypeMismatch, "tensor product over different rings");
  const auto& k = *a.ring_;
  const std::size_t na = a.rank_, nb = b.rank_, n = na * nb;
  if (n > kMaxAlgebraRank) throw Error(ErrorKind::TooLarge, "tensor product rank exceeds budget", std::to_string(n));
  std::vector<Vec> prod(n * n, Vec(n, 0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t p = 0; p < na; ++p)
        for (std::size_t q = 0; q < nb; ++q) {
          Vec& out = prod[(i * nb + j) * n + (p * nb + q)];
          for (auto [m, c] : a.sparse_[i * na + p])
            for (auto [r, d] : b.sparse_[j * nb + q]) out[m * nb + r] = k.add(out[m * nb + r], k.mul(c, d));
        }
  Vec unit(n, 0);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = k.mul(a.unit_[i], b.unit_[j]);
  return from_constants(a.ring_, n, std::move(prod), std::move(unit), a.name_ + " (x) " + b.name_);
}

AlgebraPtr Algebra::restrict_scalars(const Algebra& a, const ScalarRestriction& s) {
  if (!same_ring(a.ring_, s.big)) throw Error(ErrorKind::TypeMismatch, "restriction data for a different ring");
  const auto& K = *a.ring_;
  const std::size_t n = a.rank_, d = s.degree(), m = n * d;
  if (m > kMaxAlgebraRank) throw Error(ErrorKind::TooLarge, "restricted rank exceeds budget", std::to_string(m));
  std::vector<Vec> prod(m * m, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t u = 0; u < d; ++u) {
          Elem bb = K.mul(s.basis[t], s.basis[u]);
          Vec& out = prod[(i * d + t) * m + (j * d + u)];
          for (auto [l, c] : a.sparse_[i * n + j]) {
            Elem x = K.mul(bb, c);
            for (std::size_t v = 0; v < d; ++v) out[l * d + v] = s.coordinate(x, v);
          }
        }
  Vec unit(m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < d; ++v) unit[i * d + v] = s.coordinate(a.unit_[i], v);
  return from_constants(s.small, m, std::move(prod), std::move(unit), a.name_ + "|" + s.small->name());
}

AlgebraPtr Algebra::extend_scalars(const Algebra& b, const ScalarRestriction& s) {
  if (!same_ring(b.ring_, s.small)) throw Error(ErrorKind::TypeMismatch, "extension data for a different ring");
  std::vector<Vec> prod = b.products_;
  for (auto& v : prod)
    for (auto& x : v) x = s.embed[x];
  Vec unit = b.unit_;
  for (auto& x : unit) x = s.embed[x];
  return from_constants(s.big, b.rank_, std::move(prod), std::move(unit), b.name_ + " (x) " + s.big->name());
}

Vec Algebra::basis(std::size_t i) const {
  Vec v(rank_, 0);
  v[i] = ring_->one();
  return v;
}

Vec Algebra::scalar(Elem lambda) const { return scale(lambda, unit_); }
Vec Algebra::add(const Vec& x, const Vec& y) const { return vec_add(*ring_, x, y); }
Vec Algebra::sub(const Vec& x, const Vec& y) const { return vec_sub(*ring_, x, y); }
Vec Algebra::scale(Elem lambda, const Vec& x) const { return vec_scale(*ring_, lambda, x); }

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  const auto& k = *ring_;
  Vec out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      Elem c = k.mul(x[i], y[j]);
      for (auto [l, s] : sparse_[i * rank_ + j]) out[l] = k.add(out[l], k.mul(c, s));
    }
  }
  return out;
}

KMatrix Algebra::left_matrix(const Vec& x) const {
  KMatrix m(ring_, rank_, rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    Vec col = mul(x, basis(j));
    for (std::size_t i = 0; i < rank_; ++i) m(i, j) = col[i];
  }
  return m;
}

bool Algebra::is_unit(const Vec& x) const { return left_matrix(x).rank() == rank_; }

std::optional<Vec> Algebra::inverse(const Vec& x) const {
  // x y = 1 has a solution iff L_x is onto; in finite rank that makes x a unit
  auto y = left_matrix(x).solve(unit_);
  if (!y) return std::nullopt;
  if (mul(*y, x) != unit_) return std::nullopt;
  return y;
}

std::optional<Elem> Algebra::as_scalar(const Vec& x) const {
  std::size_t pivot = 0;
  while (pivot < rank_ && unit_[pivot] == 0) ++pivot;
  const auto& k = *ring_;
  // unit_[pivot] need not be invertible over a non-field; scan candidates
  if (k.is_unit(unit_[pivot])) {
    Elem lambda = k.mul(x[pivot], k.inv(unit_[pivot]));
    if (scalar(lambda) == x) return lambda;
    return std::nullopt;
  }
  for (Elem lambda = 0; lambda < k.size(); ++lambda)
    if (scalar(lambda) == x) return lambda;
  return std::nullopt;
}

std::vector<Vec> Algebra::center() const {
  const std::size_t n = rank_;
  const auto& k = *ring_;
  KMatrix sys(ring_, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) sys(i * n + l, j) = k.sub(products_[j * n + i][l], products_[i * n + j][l]);
  return sys.nullspace();
}

bool Algebra::same_presentation(const Algebra& other) const {
  return same_ring(ring_, other.ring_) && rank_ == other.rank_ && products_ == other.products_ &&
         unit_ == other.unit_;
}

AlgebraMap AlgebraMap::make(AlgebraPtr source, AlgebraPtr target, std::vector<Vec> images,
                            std::optional<RingAutomorphism> companion) {
  const auto& src = *source;
  const auto& tgt = *target;
  if (!same_ring(src.ring(), tgt.ring())) throw Error(ErrorKind::TypeMismatch, "algebra map between different rings");
  if (images.size() != src.rank()) throw Error(ErrorKind::InvalidArgument, "one image per source basis element");
  for (const auto& v : images)
    if (v.size() != tgt.rank()) throw Error(ErrorKind::InvalidArgument, "image has wrong length");
  AlgebraMap m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.images_ = std::move(images);
  m.companion_ = companion ? *companion : RingAutomorphism::identity(src.ring());
  if (!same_ring(m.companion_.ring(), src.ring()))
    throw Error(ErrorKind::TypeMismatch, "companion automorphism acts on a different ring");
  for (std::size_t i = 0; i < src.rank(); ++i)
    for (std::size_t j = 0; j < src.rank(); ++j)
      if (m(src.product(i, j)) != tgt.mul(m.images_[i], m.images_[j]))
        throw Error(ErrorKind::NotAutomorphism, "map is not multiplicative", pair_str(i, j));
  if (m(src.unit()) != tgt.unit()) throw Error(ErrorKind::NotAutomorphism, "map does not preserve the unit", "1");
  return m;
}

AlgebraMap AlgebraMap::automorphism(AlgebraPtr a, std::vector<Vec> images, std::optional<RingAutomorphism> companion) {
  auto m = make(a, a, std::move(images), std::move(companion));
  if (!m.is_bijective()) throw Error(ErrorKind::NotAutomorphism, "map is not bijective");
  return m;
}

AlgebraMap AlgebraMap::identity(AlgebraPtr a) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a->rank(); ++i) images.push_back(a->basis(i));
  return make(a, a, std::move(images));
}

AlgebraMap AlgebraMap::inner(AlgebraPtr a, const Vec& u) {
  auto inv = a->inverse(u);
  if (!inv) throw Error(ErrorKind::NoUnit, "conjugating element is not a unit");
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a->rank(); ++i) images.push_back(a->mul(a->mul(u, a->basis(i)), *inv));
  return make(a, a, std::move(images));
}

AlgebraMap AlgebraMap::coefficientwise(AlgebraPtr a, const RingAutomorphism& sigma) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a->rank(); ++i) images.push_back(a->basis(i));
  return automorphism(a, std::move(images), sigma);
}

Vec AlgebraMap::operator()(const Vec& x) const {
  const auto& k = *target_->ring();
  Vec out(target_->rank(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Elem c = companion_(x[i]);
    for (std::size_t l = 0; l < out.size(); ++l)
      if (images_[i][l] != 0) out[l] = k.add(out[l], k.mul(c, images_[i][l]));
  }
  return out;
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& other) const {
  if (other.target_ != source_ && !other.target_->same_presentation(*source_))
    throw Error(ErrorKind::TypeMismatch, "maps are not composable");
  AlgebraMap m;
  m.source_ = other.source_;
  m.target_ = target_;
  for (const auto& v : other.images_) m.images_.push_back((*this)(v));
  m.companion_ = companion_.compose(other.companion_);
  return m;
}

bool AlgebraMap::is_bijective() const {
  if (source_->rank() != target_->rank()) return false;
  return KMatrix::from_columns(target_->ring(), target_->rank(), images_).rank() == target_->rank();
}

AlgebraMap AlgebraMap::inverse() const {
  auto inv = KMatrix::from_columns(target_->ring(), target_->rank(), images_).inverse();
  if (!inv || source_->rank() != target_->rank()) throw Error(ErrorKind::NotAutomorphism, "map is not bijective");
  AlgebraMap m;
  m.source_ = target_;
  m.target_ = source_;
  m.companion_ = companion_.inverse();
  const std::size_t n = source_->rank();
  for (std::size_t j = 0; j < n; ++j) {
    Vec col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = m.companion_((*inv)(i, j));
    m.images_.push_back(std::move(col));
  }
  return m;
}

std::optional<Vec> is_inner(const Algebra& a, const AlgebraMap& eta) {
  if (!eta.is_K_linear()) return std::nullopt;
  const std::size_t n = a.rank();
  KMatrix sys(a.ring(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& ei = eta.images()[i];
    for (std::size_t j = 0; j < n; ++j) {
      // contribution of u_j: e_j e_i - eta(e_i) e_j
      Vec col = a.sub(a.product(j, i), a.mul(ei, a.basis(j)));
      for (std::size_t l = 0; l < n; ++l) sys(i * n + l, j) = col[l];
    }
  }
  return find_unit(a, sys.nullspace());
}

std::optional<Vec> find_unit(const Algebra& a, const std::vector<Vec>& basis) {
  const auto& k = *a.ring();
  for (const auto& b : basis)
    if (a.is_unit(b)) return b;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Vec s = a.add(basis[i], basis[j]);
      if (a.is_unit(s)) return s;
    }
  const std::size_t d = basis.size();
  if (d == 0) return std::nullopt;
  long double total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= static_cast<long double>(k.size());
  if (total > static_cast<long double>(kSearchBudget))
    throw Error(ErrorKind::TooLarge, "unit search space exceeds budget", std::to_string(d) + " generators");
  std::vector<Elem> coeff(d, 0);
  const auto q = static_cast<Elem>(k.size());
  for (;;) {
    // last coordinate fastest: lexicographic order
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++coeff[pos] < q) break;
      coeff[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    Vec x = a.zero();
    for (std::size_t i = 0; i < d; ++i)
      if (coeff[i] != 0) x = a.add(x, a.scale(coeff[i], basis[i]));
    if (a.is_unit(x)) return x;
  }
}

bool is_central_simple(const Algebra& a) {
  const std::size_t n = a.rank();
  if (!a.ring()->is_field()) throw Error(ErrorKind::NotAField, "central simplicity is decided over a field");
  const std::size_t n2 = n * n;
  KMatrix canon(a.ring(), n2, n2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t m = 0; m < n; ++m) {
        Vec img = a.mul(a.product(p, m), a.basis(q));
        for (std::size_t l = 0; l < n; ++l) canon(l * n + m, p * n + q) = img[l];
      }
  return canon.rank() == n2;
}

std::pair<AlgebraPtr, AlgebraMap> rebase(const AlgebraPtr& a, const KMatrix& p) {
  const std::size_t n = a->rank();
  auto inv = p.inverse();
  if (!inv || p.rows() != n) throw Error(ErrorKind::InvalidArgument, "change of basis must be invertible");
  std::vector<Vec> cols(n);
  for (std::size_t j = 0; j < n; ++j) {
    cols[j].resize(n);
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = p(i, j);
  }
  std::vector<Vec> prod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = inv->apply(a->mul(cols[i], cols[j]));
  auto b = Algebra::from_constants(a->ring(), n, std::move(prod), inv->apply(a->unit()), a->name() + "'");
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(inv->apply(a->basis(i)));
  return {b, AlgebraMap::make(a, b, std::move(images))};
}

}  // namespace cliffordsys
