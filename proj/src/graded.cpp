#include "cliffordsys/graded.hpp"

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

ScalarRestriction trivial_restriction(const RingPtr& K) {
  ScalarRestriction s;
  s.big = K;
  s.small = K;
  s.basis = {K->one()};
  for (Elem x = 0; x < K->size(); ++x) {
    s.embed.push_back(x);
    s.coordinates.push_back(x);
  }
  return s;
}

Vec tensor_vec(const Vec& x, const Vec& y, const FiniteCommRing& k) {
  Vec out(x.size() * y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0)
      for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = k.mul(x[i], y[j]);
  return out;
}

bool same_module(const GModule& a, const GModule& b) {
  if (&a == &b) return true;
  if (!(a.group() == b.group()) || !(a.module() == b.module())) return false;
  for (int g = 0; g < a.group().order(); ++g)
    if (a.matrix(g) != b.matrix(g)) return false;
  return true;
}

void require_cocycle(const Cochain& c, int degree) {
  if (c.degree() != degree) throw Error(ErrorKind::InvalidArgument, "cochain has the wrong degree");
  auto chk = is_cocycle(c);
  if (!chk.ok) {
    std::string w = "(";
    for (std::size_t i = 0; i < chk.witness.size(); ++i) w += (i ? "," : "") + std::to_string(chk.witness[i]);
    throw Error(ErrorKind::NotCocycle, "cochain is not a cocycle", w + ")");
  }
}

// Subspaces U, W with dim U > dim W and L(U) inside W for every L, found by
// iterating W -> span L_j(A0^-1(W)) from W = 0.
struct Compression {
  std::size_t dim_u = 0, dim_w = 0;
};

std::vector<Vec> identity_basis(const RingPtr& k, std::size_t n) {
  std::vector<Vec> out(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = k->one();
  return out;
}

std::vector<Vec> preimage(const RingPtr& k, const KMatrix& a0, const std::vector<Vec>& w) {
  const std::size_t n = a0.cols();
  KMatrix wm(k, w.size(), n);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) wm(i, j) = w[i][j];
  auto ann = wm.nullspace();
  if (ann.empty()) return identity_basis(k, n);
  KMatrix f(k, ann.size(), n);
  for (std::size_t i = 0; i < ann.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) f(i, j) = ann[i][j];
  return (f * a0).nullspace();
}

std::optional<Compression> compression_certificate(const RingPtr& k, const std::vector<KMatrix>& maps) {
  if (maps.empty()) return std::nullopt;
  const std::size_t n = maps[0].rows();
  for (const auto& a0 : maps) {
    std::vector<Vec> w;
    std::vector<Vec> u;
    for (std::size_t iter = 0; iter <= n + 1; ++iter) {
      u = preimage(k, a0, w);
      std::vector<Vec> images;
      for (const auto& l : maps)
        for (const auto& v : u) images.push_back(l.apply(v));
      auto next = span_basis(k, n, images);
      if (next.size() == w.size()) break;
      w = std::move(next);
    }
    u = preimage(k, a0, w);
    if (u.size() <= w.size()) continue;
    bool ok = true;
    for (const auto& l : maps)
      for (const auto& v : u)
        if (!in_span(k, n, w, l.apply(v))) ok = false;
    if (ok) return Compression{u.size(), w.size()};
  }
  return std::nullopt;
}

}  // namespace

CrossedProduct CrossedProduct::build(AlgebraPtr base, UnitModulePtr type, std::vector<AlgebraMap> eta,
                                     std::vector<Vec> f) {
  const auto& G = type->group();
  const int n = G.order();
  const auto& R = *base;
  const auto& K = *R.ring();
  if (K.signature() != type->ring().signature())
    throw Error(ErrorKind::TypeMismatch, "base algebra and type live over different rings");
  if (eta.size() != static_cast<std::size_t>(n) || f.size() != static_cast<std::size_t>(n * n))
    throw Error(ErrorKind::InvalidArgument, "eta needs |G| entries and f needs |G|^2 entries");
  for (const auto& v : f)
    if (v.size() != R.rank()) throw Error(ErrorKind::InvalidArgument, "factor set value has wrong length");
  for (int g = 0; g < n; ++g) {
    const auto& e = eta[static_cast<std::size_t>(g)];
    if (!e.source()->same_presentation(R) || !e.target()->same_presentation(R) || !e.is_bijective())
      throw Error(ErrorKind::NotAutomorphism, "eta_g is not an automorphism of the base", std::to_string(g));
    if (!(e.companion() == type->action()(g)))
      throw Error(ErrorKind::TypeMismatch, "eta_g does not restrict to phi(g) on K", std::to_string(g));
  }
  if (!(eta[0] == AlgebraMap::identity(base)))
    throw Error(ErrorKind::InvalidArgument, "eta_e must be the identity");
  auto fv = [&](int g, int h) -> const Vec& { return f[static_cast<std::size_t>(g * n + h)]; };
  for (int g = 0; g < n; ++g)
    if (fv(g, 0) != R.unit() || fv(0, g) != R.unit())
      throw Error(ErrorKind::InvalidArgument, "factor set is not normalized", pair_str(g, 0));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (!R.is_unit(fv(g, h))) throw Error(ErrorKind::NoUnit, "factor set value is not a unit", pair_str(g, h));
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h)
      for (std::size_t i = 0; i < R.rank(); ++i) {
        const auto& eg = eta[static_cast<std::size_t>(g)];
        const auto& eh = eta[static_cast<std::size_t>(h)];
        const auto& egh = eta[static_cast<std::size_t>(G.mul(g, h))];
        if (R.mul(eg(eh(R.basis(i))), fv(g, h)) != R.mul(fv(g, h), egh(R.basis(i))))
          throw Error(ErrorKind::NotCompatible, "eta_g eta_h != iota_f(g,h) eta_gh", pair_str(g, h));
      }
  for (int s = 1; s < n; ++s)
    for (int t = 1; t < n; ++t)
      for (int c = 1; c < n; ++c) {
        Vec lhs = R.mul(eta[static_cast<std::size_t>(s)](fv(t, c)), fv(s, G.mul(t, c)));
        Vec rhs = R.mul(fv(s, t), fv(G.mul(s, t), c));
        if (lhs != rhs) throw Error(ErrorKind::NotAssociative, "twisted cocycle identity fails", triple_str(s, t, c));
      }

  CrossedProduct cp;
  cp.base_ = base;
  cp.type_ = type;
  cp.eta_ = std::move(eta);
  cp.f_ = f;
  cp.scalars_ = type->action().is_trivial() ? trivial_restriction(R.ring()) : restrict_to_subring(R.ring());
  const auto& S = cp.scalars_;
  const std::size_t r = R.rank(), d = S.degree(), m = static_cast<std::size_t>(n) * r * d;
  if (m > kMaxAlgebraRank) throw Error(ErrorKind::TooLarge, "crossed product rank exceeds budget", std::to_string(m));

  // beta_t e_j after eta_g, for every (g, j, t)
  std::vector<Vec> moved(static_cast<std::size_t>(n) * r * d);
  for (int g = 0; g < n; ++g)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t t = 0; t < d; ++t)
        moved[(static_cast<std::size_t>(g) * r + j) * d + t] = cp.eta_[static_cast<std::size_t>(g)](R.scale(S.basis[t], R.basis(j)));

  std::vector<Vec> prod(m * m, Vec(m, 0));
  for (int g = 0; g < n; ++g)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t s = 0; s < d; ++s) {
        Vec left = R.scale(S.basis[s], R.basis(i));
        const std::size_t a = (static_cast<std::size_t>(g) * r + i) * d + s;
        for (int h = 0; h < n; ++h)
          for (std::size_t j = 0; j < r; ++j)
            for (std::size_t t = 0; t < d; ++t) {
              Vec x = R.mul(R.mul(left, moved[(static_cast<std::size_t>(g) * r + j) * d + t]), fv(g, h));
              const std::size_t b = (static_cast<std::size_t>(h) * r + j) * d + t;
              const std::size_t gh = static_cast<std::size_t>(G.mul(g, h));
              Vec& out = prod[a * m + b];
              for (std::size_t l = 0; l < r; ++l)
                for (std::size_t v = 0; v < d; ++v) out[(gh * r + l) * d + v] = S.coordinate(x[l], v);
            }
      }
  cp.grading_.resize(m);
  for (std::size_t idx = 0; idx < m; ++idx) cp.grading_[idx] = static_cast<int>(idx / (r * d));
  try {
    cp.ambient_ = Algebra::from_constants(S.small, m, std::move(prod), cp.embed(R.unit(), 0),
                                          R.name() + "*" + G.name());
  } catch (const Error& e) {
    throw InternalError(std::string("crossed product failed direct validation after passing the identities: ") +
                        e.what());
  }
  return cp;
}

Vec CrossedProduct::embed(const Vec& r, int g) const {
  const std::size_t rk = base_->rank(), d = scalars_.degree();
  Vec out(static_cast<std::size_t>(group().order()) * rk * d, 0);
  for (std::size_t i = 0; i < rk; ++i)
    for (std::size_t t = 0; t < d; ++t)
      out[(static_cast<std::size_t>(g) * rk + i) * d + t] = scalars_.coordinate(r[i], t);
  return out;
}

StrongGradingReport verify_strongly_graded(const Algebra& a, const FiniteGroup& g, const std::vector<int>& degrees) {
  const std::size_t n = a.rank();
  const int order = g.order();
  if (degrees.size() != n) throw Error(ErrorKind::InvalidGrading, "one degree per basis element is required");
  std::vector<std::vector<std::size_t>> comp(static_cast<std::size_t>(order));
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] < 0 || degrees[i] >= order)
      throw Error(ErrorKind::InvalidGrading, "degree outside the group", std::to_string(i));
    comp[static_cast<std::size_t>(degrees[i])].push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int target = g.mul(degrees[i], degrees[j]);
      const Vec& p = a.product(i, j);
      for (std::size_t l = 0; l < n; ++l)
        if (p[l] != 0 && degrees[l] != target)
          throw Error(ErrorKind::InvalidGrading, "product leaves the expected component",
                      "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

  StrongGradingReport rep;
  rep.strong = true;
  for (int x = 0; x < order && rep.strong; ++x)
    for (int y = 0; y < order && rep.strong; ++y) {
      std::vector<Vec> prods;
      for (auto i : comp[static_cast<std::size_t>(x)])
        for (auto j : comp[static_cast<std::size_t>(y)]) prods.push_back(a.product(i, j));
      if (span_rank(a.ring(), n, prods) != comp[static_cast<std::size_t>(g.mul(x, y))].size()) {
        rep.strong = false;
        rep.span_failure = std::make_pair(x, y);
      }
    }

  rep.unit_witnesses.assign(static_cast<std::size_t>(order), std::nullopt);
  rep.crossed = true;
  const auto& k = *a.ring();
  for (int x = 0; x < order; ++x) {
    const auto& c = comp[static_cast<std::size_t>(x)];
    std::vector<Vec> basis;
    for (auto i : c) basis.push_back(a.basis(i));
    std::optional<Vec> found;
    for (const auto& b : basis)
      if (a.is_unit(b)) {
        found = b;
        break;
      }
    if (!found && !basis.empty()) {
      std::vector<KMatrix> maps;
      for (const auto& b : basis) maps.push_back(a.left_matrix(b));
      if (auto cert = compression_certificate(a.ring(), maps)) {
        rep.crossed = false;
        rep.certified_component = x;
        rep.certificate_dim_u = cert->dim_u;
        rep.certificate_dim_w = cert->dim_w;
        break;
      }
      long double total = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) total *= static_cast<long double>(k.size());
      if (total > static_cast<long double>(kSearchBudget))
        throw Error(ErrorKind::TooLarge, "component enumeration exceeds budget", std::to_string(x));
      std::vector<Elem> coeff(basis.size(), 0);
      const auto q = static_cast<Elem>(k.size());
      for (bool more = true; more && !found;) {
        std::size_t pos = basis.size();
        more = false;
        while (pos > 0) {
          --pos;
          if (++coeff[pos] < q) {
            more = true;
            break;
          }
          coeff[pos] = 0;
        }
        if (!more) break;
        ++rep.enumerated;
        Vec v = a.zero();
        for (std::size_t i = 0; i < basis.size(); ++i)
          if (coeff[i] != 0) v = a.add(v, a.scale(coeff[i], basis[i]));
        if (a.is_unit(v)) found = v;
      }
    }
    rep.unit_witnesses[static_cast<std::size_t>(x)] = found;
    if (!found) {
      rep.crossed = false;
      break;
    }
  }
  return rep;
}

CrossedProduct graded_product(const CrossedProduct& a, const CrossedProduct& b) {
  if (!(a.group() == b.group()) || !same_type(*a.type(), *b.type()))
    throw Error(ErrorKind::TypeMismatch, "graded product needs the same group and type");
  const auto& k = *a.base()->ring();
  auto base = Algebra::tensor(*a.base(), *b.base());
  const int n = a.group().order();
  std::vector<AlgebraMap> eta;
  for (int g = 0; g < n; ++g) {
    std::vector<Vec> images;
    for (std::size_t i = 0; i < a.base()->rank(); ++i)
      for (std::size_t j = 0; j < b.base()->rank(); ++j)
        images.push_back(tensor_vec(a.eta(g)(a.base()->basis(i)), b.eta(g)(b.base()->basis(j)), k));
    eta.push_back(AlgebraMap::automorphism(base, std::move(images), a.type()->action()(g)));
  }
  std::vector<Vec> f;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) f.push_back(tensor_vec(a.f(g, h), b.f(g, h), k));
  return CrossedProduct::build(base, a.type(), std::move(eta), std::move(f));
}

CrossedProduct twist(const Cochain& alpha, const CrossedProduct& a) {
  if (!same_module(*alpha.module(), *a.type()->module()))
    throw Error(ErrorKind::TypeMismatch, "cocycle coefficients differ from the crossed product type");
  require_cocycle(alpha, 2);
  const int n = a.group().order();
  std::vector<Vec> f;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Elem s = a.type()->exp(alpha.at(std::vector<int>{g, h}));
      f.push_back(a.base()->scale(s, a.f(g, h)));
    }
  return CrossedProduct::build(a.base(), a.type(), a.etas(), std::move(f));
}

CrossedProduct sigma_phi(const Cochain& alpha, const UnitModulePtr& type) {
  if (!same_module(*alpha.module(), *type->module()))
    throw Error(ErrorKind::TypeMismatch, "cocycle coefficients differ from the type");
  require_cocycle(alpha, 2);
  auto base = Algebra::base_ring(type->action().ring());
  const int n = type->group().order();
  std::vector<AlgebraMap> eta;
  for (int g = 0; g < n; ++g) eta.push_back(AlgebraMap::automorphism(base, {base->unit()}, type->action()(g)));
  std::vector<Vec> f;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) f.push_back(Vec{type->exp(alpha.at(std::vector<int>{g, h}))});
  return CrossedProduct::build(base, type, std::move(eta), std::move(f));
}

Cochain cocycle_of(const CrossedProduct& a) {
  if (a.base()->rank() != 1) throw Error(ErrorKind::InvalidArgument, "base algebra must have rank one");
  Cochain alpha(a.type()->module(), 2);
  for (std::size_t p = 0; p < alpha.positions(); ++p) {
    auto t = alpha.tuple(p);
    auto s = a.base()->as_scalar(a.f(t[0], t[1]));
    if (!s) throw InternalError("rank-one base with a non-scalar factor set value");
    alpha.set_value(p, a.type()->log(*s));
  }
  return alpha;
}

CrossedProduct transport(const CrossedProduct& a, const AlgebraMap& psi) {
  if (!psi.source()->same_presentation(*a.base()) || !psi.is_K_linear() || !psi.is_bijective())
    throw Error(ErrorKind::InvalidArgument, "transport needs a K-linear isomorphism out of the base");
  auto inv = psi.inverse();
  std::vector<AlgebraMap> eta;
  for (const auto& e : a.etas()) eta.push_back(psi.compose(e).compose(inv));
  std::vector<Vec> f;
  for (const auto& v : a.factor_set()) f.push_back(psi(v));
  return CrossedProduct::build(psi.target(), a.type(), std::move(eta), std::move(f));
}

GradedEquivalence graded_equivalent_over_K(const Cochain& alpha, const Cochain& beta) {
  if (!same_module(*alpha.module(), *beta.module()))
    throw Error(ErrorKind::TypeMismatch, "cocycles over different modules");
  require_cocycle(alpha, 2);
  require_cocycle(beta, 2);
  GradedEquivalence out;
  auto solved = solve_coboundary(alpha, beta);
  out.equivalent = solved.has_value();

  const auto& mod = *alpha.module();
  const std::uint64_t m = mod.module().order();
  const int n = mod.group().order();
  long double total = 1;
  for (int i = 1; i < n; ++i) total *= static_cast<long double>(m);
  if (total <= static_cast<long double>(kSearchBudget)) {
    out.direct_path_ran = true;
    const Cochain diff = alpha - beta;
    Cochain lambda(alpha.module(), 1);
    const auto count = static_cast<std::uint64_t>(total);
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t p = 0; p < lambda.positions(); ++p) {
        lambda.set_value(p, mod.module().element(rest % m));
        rest /= m;
      }
      if (coboundary(lambda) == diff) {
        found = true;
        out.lambda = lambda;
      }
    }
    if (found != out.equivalent)
      throw InternalError("direct lambda search and cohomology solver disagree on graded equivalence");
  } else if (solved) {
    out.lambda = *solved;
  }
  return out;
}

CrossedEquivalence crossed_equivalent(const CrossedProduct& a, const CrossedProduct& b) {
  if (!a.base()->same_presentation(*b.base()) || !(a.group() == b.group()) || !same_type(*a.type(), *b.type()))
    throw Error(ErrorKind::TypeMismatch, "comparison needs the same base, group and type");
  const auto& R = *a.base();
  const int n = a.group().order();
  const std::size_t r = R.rank();
  CrossedEquivalence out;
  std::vector<Vec> x(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    KMatrix sys(R.ring(), r * r, r);
    for (std::size_t i = 0; i < r; ++i) {
      Vec ea = a.eta(g)(R.basis(i)), eb = b.eta(g)(R.basis(i));
      for (std::size_t j = 0; j < r; ++j) {
        Vec col = R.sub(R.mul(ea, R.basis(j)), R.mul(R.basis(j), eb));
        for (std::size_t l = 0; l < r; ++l) sys(i * r + l, j) = col[l];
      }
    }
    auto space = sys.nullspace();
    if (space.size() != 1) out.complete = false;
    auto u = find_unit(R, space);
    if (!u) {
      // any graded isomorphism fixing R sends u_g to a unit of this space
      out.equivalent = false;
      out.complete = true;
      return out;
    }
    x[static_cast<std::size_t>(g)] = *u;
  }
  Cochain delta(a.type()->module(), 2);
  for (std::size_t p = 0; p < delta.positions(); ++p) {
    auto t = delta.tuple(p);
    int g = t[0], h = t[1], gh = a.group().mul(g, h);
    Vec rhs = R.mul(R.mul(x[static_cast<std::size_t>(g)], b.eta(g)(x[static_cast<std::size_t>(h)])), b.f(g, h));
    Vec lhs = R.mul(a.f(g, h), x[static_cast<std::size_t>(gh)]);
    auto s = R.as_scalar(R.mul(lhs, *R.inverse(rhs)));
    if (!s) {
      out.equivalent = false;
      return out;
    }
    delta.set_value(p, a.type()->log(*s));
  }
  if (!is_cocycle(delta).ok) {
    if (out.complete) throw InternalError("intertwiner defect is not a 2-cocycle");
    out.equivalent = false;
    return out;
  }
  out.equivalent = solve_coboundary(delta, Cochain(a.type()->module(), 2)).has_value();
  return out;
}

CollectiveCharacter chi(const CrossedProduct& a) { return CollectiveCharacter::make(a.base(), a.etas(), a.type()); }

CrossedProduct skew_group_algebra(const AlgebraPtr& r, const UnitModulePtr& type) {
  const int n = type->group().order();
  std::vector<AlgebraMap> eta;
  for (int g = 0; g < n; ++g) eta.push_back(AlgebraMap::coefficientwise(r, type->action()(g)));
  return CrossedProduct::build(r, type, std::move(eta), std::vector<Vec>(static_cast<std::size_t>(n * n), r->unit()));
}

}  // namespace cliffordsys
