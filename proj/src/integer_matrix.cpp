#include "cliffordsys/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& entries)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (entries.size() != rows * cols) throw Error(ErrorKind::InvalidArgument, "entry count does not match dimensions");
  for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = entries[i];
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in apply");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw Error(ErrorKind::InvalidArgument, "row mismatch in hconcat");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Elementary operations on the working matrix, mirrored on the transforms.
// Invariant: S = U * M * V, U_inv = U^-1, V_inv = V^-1.
class SmithWorker {
 public:
  SmithWorker(const IntMatrix& m, bool rows, bool cols)
      : a_(m), track_rows_(rows), track_cols_(cols) {
    if (rows) {
      u_ = IntMatrix::identity(m.rows());
      u_inv_ = u_;
    }
    if (cols) {
      v_ = IntMatrix::identity(m.cols());
      v_inv_ = v_;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if (track_rows_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
      for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
    }
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if (track_cols_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
      for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
    }
  }

  // row_i -= q * row_t
  void row_sub(std::size_t i, std::size_t t, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (a_(t, c) != 0) a_(i, c) -= q * a_(t, c);
    if (track_rows_) {
      for (std::size_t c = 0; c < u_.cols(); ++c)
        if (u_(t, c) != 0) u_(i, c) -= q * u_(t, c);
      for (std::size_t r = 0; r < u_inv_.rows(); ++r)
        if (u_inv_(r, i) != 0) u_inv_(r, t) += q * u_inv_(r, i);
    }
  }

  // col_j -= q * col_t
  void col_sub(std::size_t j, std::size_t t, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (a_(r, t) != 0) a_(r, j) -= q * a_(r, t);
    if (track_cols_) {
      for (std::size_t r = 0; r < v_.rows(); ++r)
        if (v_(r, t) != 0) v_(r, j) -= q * v_(r, t);
      for (std::size_t c = 0; c < v_inv_.cols(); ++c)
        if (v_inv_(j, c) != 0) v_inv_(t, c) += q * v_inv_(j, c);
    }
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if (track_rows_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
      for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
    }
  }

  void run() {
    const std::size_t m = a_.rows(), n = a_.cols();
    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
      if (!move_smallest_to(t, t, m, n)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a_(i, t) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
          row_sub(i, t, q);
          if (a_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a_(t, j) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
          col_sub(j, t, q);
          if (a_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_smallest_in_cross(t);
          continue;
        }
        // divisibility condition on the remaining block
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
              row_sub(t, i, -1);  // row_t += row_i
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (a_(t, t) < 0) negate_row(t);
    }
  }

  SmithDecomposition result() && {
    SmithDecomposition d;
    d.U = std::move(u_);
    d.U_inv = std::move(u_inv_);
    d.V = std::move(v_);
    d.V_inv = std::move(v_inv_);
    d.S = std::move(a_);
    const std::size_t lim = std::min(d.S.rows(), d.S.cols());
    while (d.rank < lim && d.S(d.rank, d.rank) != 0) ++d.rank;
    return d;
  }

 private:
  bool move_smallest_to(std::size_t t, std::size_t, std::size_t m, std::size_t n) {
    std::size_t bi = m, bj = n;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a_(i, j) == 0) continue;
        if (bi == m || abs(a_(i, j)) < best) {
          best = abs(a_(i, j));
          bi = i;
          bj = j;
          if (best == 1) goto found;
        }
      }
    if (bi == m) return false;
  found:
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    Integer best = abs(a_(t, t));
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      if (a_(i, t) != 0 && abs(a_(i, t)) < best) {
        best = abs(a_(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < a_.cols(); ++j)
      if (a_(t, j) != 0 && abs(a_(t, j)) < best) {
        best = abs(a_(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  IntMatrix a_, u_, u_inv_, v_, v_inv_;
  bool track_rows_, track_cols_;
};

}  // namespace

SmithDecomposition smith_decomposition(const IntMatrix& m, bool track_row_ops, bool track_col_ops) {
  SmithWorker w(m, track_row_ops, track_col_ops);
  w.run();
  return std::move(w).result();
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithDecomposition d = smith_decomposition(m);
  return SmithForm{std::move(d.U), std::move(d.S), std::move(d.V)};
}

IntegerSolution solve_integer_system(const SmithDecomposition& smith, std::span<const Integer> b) {
  IntegerSolution sol;
  const std::size_t m = smith.S.rows(), n = smith.S.cols();
  if (b.size() != m) throw Error(ErrorKind::InvalidArgument, "right-hand side has wrong length");
  std::vector<Integer> y = smith.U.apply(b);
  std::vector<Integer> t(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < smith.rank) {
      const Integer& s = smith.S(i, i);
      if (!mpz_divisible_p(y[i].get_mpz_t(), s.get_mpz_t())) return sol;
      mpz_divexact(t[i].get_mpz_t(), y[i].get_mpz_t(), s.get_mpz_t());
    } else if (y[i] != 0) {
      return sol;
    }
  }
  sol.x = smith.V.apply(t);
  sol.ok = true;
  return sol;
}

Subquotient Subquotient::compute(const std::vector<Integer>& ambient_factors, const IntMatrix& z_generators,
                                 const IntMatrix& b_generators) {
  const std::size_t r = ambient_factors.size();
  if (z_generators.rows() != r || b_generators.rows() != r)
    throw Error(ErrorKind::InvalidArgument, "generator matrices must have one row per ambient factor");
  std::size_t finite = 0;
  for (const auto& d : ambient_factors)
    if (d != 0) ++finite;
  IntMatrix relations(r, finite);
  for (std::size_t i = 0, c = 0; i < r; ++i)
    if (ambient_factors[i] != 0) relations(i, c++) = ambient_factors[i];

  Subquotient q;
  q.ambient_ = ambient_factors;
  q.z_smith_ = smith_decomposition(z_generators.hconcat(relations), true, false);
  q.z_rank_ = q.z_smith_.rank;

  const IntMatrix b_full = b_generators.hconcat(relations);
  IntMatrix y(q.z_rank_, b_full.cols());
  for (std::size_t c = 0; c < b_full.cols(); ++c) {
    bool ok = true;
    std::vector<Integer> coords = q.z_coordinates(b_full.column(c), ok);
    if (!ok)
      throw Error(ErrorKind::NotContained, "B generator is not in the span of Z",
                  c < b_generators.cols() ? "B generator " + std::to_string(c) : "ambient relation");
    for (std::size_t i = 0; i < q.z_rank_; ++i) y(i, c) = coords[i];
  }
  q.y_smith_ = smith_decomposition(y, true, false);
  for (std::size_t i = 0; i < q.z_rank_; ++i) {
    Integer d = q.y_smith_.diagonal(i);
    if (i >= q.y_smith_.rank) d = 0;
    if (d == 1) continue;
    q.kept_.push_back(i);
    q.factors_.push_back(d);
  }
  return q;
}

std::vector<Integer> Subquotient::z_coordinates(std::span<const Integer> x, bool& ok) const {
  ok = true;
  std::vector<Integer> y = z_smith_.U.apply(x);
  std::vector<Integer> c(z_rank_);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < z_rank_) {
      const Integer& s = z_smith_.S(i, i);
      if (!mpz_divisible_p(y[i].get_mpz_t(), s.get_mpz_t())) {
        ok = false;
        return {};
      }
      mpz_divexact(c[i].get_mpz_t(), y[i].get_mpz_t(), s.get_mpz_t());
    } else if (y[i] != 0) {
      ok = false;
      return {};
    }
  }
  return c;
}

bool Subquotient::contains(std::span<const Integer> x) const {
  bool ok = true;
  z_coordinates(x, ok);
  return ok;
}

std::vector<Integer> Subquotient::project(std::span<const Integer> x) const {
  bool ok = true;
  std::vector<Integer> c = z_coordinates(x, ok);
  if (!ok) throw Error(ErrorKind::NotContained, "element is not in Z");
  std::vector<Integer> w = y_smith_.U.apply(c);
  std::vector<Integer> out;
  out.reserve(kept_.size());
  for (std::size_t j = 0; j < kept_.size(); ++j) {
    Integer v = w[kept_[j]];
    if (factors_[j] != 0) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), factors_[j].get_mpz_t());
    out.push_back(v);
  }
  return out;
}

std::vector<Integer> Subquotient::section(std::size_t j) const {
  if (j >= kept_.size()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  const std::size_t r = ambient_.size();
  std::vector<Integer> x(r);
  for (std::size_t l = 0; l < z_rank_; ++l) {
    const Integer& e = y_smith_.U_inv(l, kept_[j]);
    if (e == 0) continue;
    Integer scale = e * z_smith_.S(l, l);
    for (std::size_t i = 0; i < r; ++i) x[i] += scale * z_smith_.U_inv(i, l);
  }
  for (std::size_t i = 0; i < r; ++i)
    if (ambient_[i] != 0) mpz_fdiv_r(x[i].get_mpz_t(), x[i].get_mpz_t(), ambient_[i].get_mpz_t());
  return x;
}

}  // namespace cliffordsys
