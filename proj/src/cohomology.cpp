#include "cliffordsys/cohomology.hpp"

#include "cliffordsys/error.hpp"

namespace cliffordsys {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

void require_finite(const GModule& m) {
  if (!m.module().is_finite())
    throw Error(ErrorKind::InvalidArgument, "cohomology needs finite coefficients", m.module().to_string());
}

}  // namespace

Cochain::Cochain(GModulePtr module, int degree)
    : module_(std::move(module)), degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative cochain degree");
  positions_ = ipow(static_cast<std::size_t>(module_->group().order() - 1), degree);
  data_.assign(positions_ * module_->rank(), 0);
}

std::size_t Cochain::position(std::span<const int> tuple) const {
  const std::size_t base = static_cast<std::size_t>(module_->group().order() - 1);
  std::size_t pos = 0;
  for (int g : tuple) pos = pos * base + static_cast<std::size_t>(g - 1);
  return pos;
}

std::vector<int> Cochain::tuple(std::size_t position) const {
  const std::size_t base = static_cast<std::size_t>(module_->group().order() - 1);
  std::vector<int> t(static_cast<std::size_t>(degree_));
  for (int i = degree_ - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(position % base) + 1;
    position /= base;
  }
  return t;
}

Coords Cochain::at(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != degree_) throw Error(ErrorKind::InvalidArgument, "tuple has wrong length");
  for (int g : tuple)
    if (g == 0) return module_->module().zero();
  return value(position(tuple));
}

void Cochain::set(std::span<const int> tuple, const Coords& v) {
  if (static_cast<int>(tuple.size()) != degree_) throw Error(ErrorKind::InvalidArgument, "tuple has wrong length");
  for (int g : tuple)
    if (g == 0) {
      if (!module_->module().is_zero(v))
        throw Error(ErrorKind::InvalidArgument, "normalized cochains vanish on tuples containing the identity");
      return;
    }
  set_value(position(tuple), v);
}

Coords Cochain::value(std::size_t p) const {
  const std::size_t r = module_->rank();
  return Coords(data_.begin() + static_cast<long>(p * r), data_.begin() + static_cast<long>((p + 1) * r));
}

void Cochain::set_value(std::size_t p, const Coords& v) {
  const std::size_t r = module_->rank();
  if (v.size() != r) throw Error(ErrorKind::InvalidArgument, "coefficient has wrong rank");
  Coords red = module_->module().reduce(v);
  for (std::size_t i = 0; i < r; ++i) data_[p * r + i] = red[i];
}

Cochain Cochain::operator+(const Cochain& o) const {
  Cochain c(module_, degree_);
  const auto& f = module_->module().factors();
  const std::size_t r = f.size();
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = mod(data_[i] + o.data_[i], f[i % r]);
  return c;
}

Cochain Cochain::operator-(const Cochain& o) const {
  Cochain c(module_, degree_);
  const auto& f = module_->module().factors();
  const std::size_t r = f.size();
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = mod(data_[i] - o.data_[i], f[i % r]);
  return c;
}

Cochain Cochain::operator-() const {
  Cochain c(module_, degree_);
  return c - *this;
}

bool Cochain::is_zero() const {
  for (long v : data_)
    if (v != 0) return false;
  return true;
}

std::vector<Integer> Cochain::integer_data() const {
  std::vector<Integer> out(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) out[i] = data_[i];
  return out;
}

Cochain Cochain::from_integers(GModulePtr module, int degree, std::span<const Integer> data) {
  Cochain c(std::move(module), degree);
  if (data.size() != c.data_.size()) throw Error(ErrorKind::InvalidArgument, "cochain data has wrong length");
  const auto& f = c.module_->module().factors();
  const std::size_t r = f.size();
  for (std::size_t i = 0; i < data.size(); ++i) {
    Integer v;
    Integer d = f[i % r];
    mpz_fdiv_r(v.get_mpz_t(), data[i].get_mpz_t(), d.get_mpz_t());
    c.data_[i] = v.get_si();
  }
  return c;
}

Cochain coboundary(const Cochain& c) {
  const GModule& m = *c.module();
  const FiniteGroup& G = m.group();
  const AbelianGroup& A = m.module();
  const int n = c.degree();
  Cochain out(c.module(), n + 1);
  std::vector<int> t, sub(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < out.positions(); ++p) {
    t = out.tuple(p);
    // g_1 . c(g_2..g_{n+1})
    for (int i = 0; i < n; ++i) sub[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i) + 1];
    Coords acc = m.act(t[0], c.at(sub));
    for (int i = 1; i <= n; ++i) {
      std::size_t k = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        if (j == i - 1)
          sub[k++] = G.mul(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j) + 1]);
        else
          sub[k++] = t[static_cast<std::size_t>(j)];
      }
      Coords v = c.at(sub);
      acc = (i % 2) ? A.sub(acc, v) : A.add(acc, v);
    }
    for (int i = 0; i < n; ++i) sub[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)];
    Coords last = c.at(sub);
    acc = ((n + 1) % 2) ? A.sub(acc, last) : A.add(acc, last);
    out.set_value(p, acc);
  }
  return out;
}

CocycleCheck is_cocycle(const Cochain& c) {
  Cochain d = coboundary(c);
  CocycleCheck res;
  const std::size_t r = c.module()->rank();
  for (std::size_t p = 0; p < d.positions(); ++p)
    for (std::size_t i = 0; i < r; ++i)
      if (d.data()[p * r + i] != 0) {
        res.ok = false;
        res.witness = d.tuple(p);
        return res;
      }
  return res;
}

IntMatrix coboundary_matrix(const GModule& m, int n) {
  const FiniteGroup& G = m.group();
  const std::size_t r = m.rank();
  const std::size_t base = static_cast<std::size_t>(G.order() - 1);
  const std::size_t src = ipow(base, n), dst = ipow(base, n + 1);
  IntMatrix a(dst * r, src * r);
  auto pos_of = [&](const std::vector<int>& t) {
    std::size_t pos = 0;
    for (int g : t) pos = pos * base + static_cast<std::size_t>(g - 1);
    return pos;
  };
  std::vector<int> t(static_cast<std::size_t>(n) + 1), sub(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < dst; ++p) {
    std::size_t q = p;
    for (int i = n; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(q % base) + 1;
      q /= base;
    }
    const std::size_t row0 = p * r;
    for (int i = 0; i < n; ++i) sub[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i) + 1];
    {
      const std::size_t col0 = pos_of(sub) * r;
      const auto& mat = m.matrix(t[0]);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a(row0 + i, col0 + j) += mat[i * r + j];
    }
    for (int i = 1; i <= n; ++i) {
      std::size_t k = 0;
      bool hits_identity = false;
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        int v = j == i - 1 ? G.mul(t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(j) + 1])
                           : t[static_cast<std::size_t>(j)];
        if (v == 0) hits_identity = true;
        sub[k++] = v;
      }
      if (hits_identity) continue;
      const std::size_t col0 = pos_of(sub) * r;
      for (std::size_t j = 0; j < r; ++j) a(row0 + j, col0 + j) += (i % 2) ? -1 : 1;
    }
    for (int i = 0; i < n; ++i) sub[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)];
    const std::size_t col0 = pos_of(sub) * r;
    for (std::size_t j = 0; j < r; ++j) a(row0 + j, col0 + j) += ((n + 1) % 2) ? -1 : 1;
  }
  return a;
}

namespace {

// Diagonal relation columns for the ambient group C^n = M^positions.
IntMatrix relations(const GModule& m, std::size_t positions) {
  const auto& f = m.module().factors();
  const std::size_t r = f.size();
  IntMatrix d(positions * r, positions * r);
  for (std::size_t i = 0; i < positions * r; ++i) d(i, i) = f[i % r];
  return d;
}

void check_budget(const GModule& m, int n, std::size_t budget) {
  const std::size_t rows = ipow(static_cast<std::size_t>(m.group().order() - 1), n + 1) * m.rank();
  if (rows > budget)
    throw Error(ErrorKind::TooLarge, "coboundary matrix exceeds the linear-algebra budget", std::to_string(rows));
}

}  // namespace

Cohomology Cohomology::compute(GModulePtr module, int n, std::size_t budget) {
  const GModule& m = *module;
  require_finite(m);
  if (n < 1 || n > 3) throw Error(ErrorKind::InvalidArgument, "cohomology degree must be 1, 2 or 3");
  check_budget(m, n, budget);
  const std::size_t base = static_cast<std::size_t>(m.group().order() - 1);
  const std::size_t r = m.rank();
  const std::size_t src = ipow(base, n) * r;

  // Z^n: kernel of d^n modulo the target relations.
  IntMatrix a_n = coboundary_matrix(m, n);
  IntMatrix sys = a_n.hconcat(relations(m, ipow(base, n + 1)));
  SmithDecomposition ker = smith_decomposition(sys, false, true);
  IntMatrix z(src, sys.cols() - ker.rank);
  for (std::size_t c = ker.rank; c < sys.cols(); ++c)
    for (std::size_t i = 0; i < src; ++i) z(i, c - ker.rank) = ker.V(i, c);

  IntMatrix b = coboundary_matrix(m, n - 1);

  std::vector<Integer> ambient(src);
  for (std::size_t i = 0; i < src; ++i) ambient[i] = m.module().factors()[i % r];

  Cohomology h;
  h.module_ = module;
  h.degree_ = n;
  h.quotient_ = std::make_shared<const Subquotient>(Subquotient::compute(ambient, z, b));
  for (const auto& d : h.quotient_->factors()) {
    if (d == 0) throw InternalError("infinite factor in cohomology of a finite module");
    h.factors_.push_back(d.get_si());
  }
  for (std::size_t j = 0; j < h.factors_.size(); ++j) {
    auto rep = h.quotient_->section(j);
    Cochain c = Cochain::from_integers(module, n, rep);
    if (!is_cocycle(c).ok) throw InternalError("cohomology representative is not a cocycle");
    h.representatives_.push_back(std::move(c));
  }
  return h;
}

std::vector<long> Cohomology::class_of(const Cochain& z) const {
  if (z.degree() != degree_) throw Error(ErrorKind::InvalidArgument, "cochain degree mismatch");
  auto chk = is_cocycle(z);
  if (!chk.ok) {
    std::string w = "(";
    for (std::size_t i = 0; i < chk.witness.size(); ++i) w += (i ? "," : "") + std::to_string(chk.witness[i]);
    throw Error(ErrorKind::NotCocycle, "class_of needs a cocycle", w + ")");
  }
  auto coords = quotient_->project(z.integer_data());
  std::vector<long> out;
  out.reserve(coords.size());
  for (const auto& v : coords) out.push_back(v.get_si());
  return out;
}

CoboundarySolver::CoboundarySolver(GModulePtr module, int n, std::size_t budget)
    : module_(std::move(module)), degree_(n) {
  const GModule& m = *module_;
  require_finite(m);
  if (n < 1 || n > 3) throw Error(ErrorKind::InvalidArgument, "coboundary solving needs degree 1, 2 or 3");
  check_budget(m, n - 1, budget);
  const std::size_t base = static_cast<std::size_t>(m.group().order() - 1);
  source_size_ = ipow(base, n - 1) * m.rank();
  IntMatrix sys = coboundary_matrix(m, n - 1).hconcat(relations(m, ipow(base, n)));
  smith_ = smith_decomposition(sys, true, true);
}

std::optional<Cochain> CoboundarySolver::solve_difference(const Cochain& diff) const {
  if (diff.degree() != degree_) throw Error(ErrorKind::InvalidArgument, "cochain degree mismatch");
  auto sol = solve_integer_system(smith_, diff.integer_data());
  if (!sol.ok) return std::nullopt;
  std::vector<Integer> x(sol.x.begin(), sol.x.begin() + static_cast<long>(source_size_));
  Cochain c = Cochain::from_integers(module_, degree_ - 1, x);
  if (!(coboundary(c) == diff)) throw InternalError("coboundary solution does not verify");
  return c;
}

std::optional<Cochain> CoboundarySolver::solve(const Cochain& z, const Cochain& target) const {
  for (const Cochain* c : {&z, &target}) {
    auto chk = is_cocycle(*c);
    if (!chk.ok) {
      std::string w = "(";
      for (std::size_t i = 0; i < chk.witness.size(); ++i) w += (i ? "," : "") + std::to_string(chk.witness[i]);
      throw Error(ErrorKind::NotCocycle, "solve_coboundary needs cocycles", w + ")");
    }
  }
  return solve_difference(z - target);
}

std::optional<Cochain> solve_coboundary(const Cochain& z, const Cochain& target) {
  return CoboundarySolver(z.module(), z.degree()).solve(z, target);
}

}  // namespace cliffordsys
