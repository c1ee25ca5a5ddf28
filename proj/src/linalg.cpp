#include "cliffordsys/linalg.hpp"

#include <algorithm>

#include "cliffordsys/error.hpp"

namespace cliffordsys {

KMatrix::KMatrix(RingPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_->is_field()) throw Error(ErrorKind::NotAField, "linear algebra needs a field", field_->name());
}

KMatrix KMatrix::identity(RingPtr field, std::size_t n) {
  KMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_->one();
  return m;
}

KMatrix KMatrix::from_columns(RingPtr field, std::size_t rows, const std::vector<Vec>& columns) {
  KMatrix m(std::move(field), rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  return m;
}

KMatrix KMatrix::operator*(const KMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::InvalidArgument, "matrix dimensions do not match");
  const auto& k = *field_;
  KMatrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      Elem a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        Elem b = other(l, j);
        if (b != 0) out(i, j) = k.add(out(i, j), k.mul(a, b));
      }
    }
  return out;
}

Vec KMatrix::apply(const Vec& x) const {
  const auto& k = *field_;
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (x[j] != 0 && (*this)(i, j) != 0) out[i] = k.add(out[i], k.mul((*this)(i, j), x[j]));
  return out;
}

std::vector<std::size_t> KMatrix::reduce() {
  const auto& k = *field_;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    Elem s = k.inv((*this)(row, c));
    for (std::size_t j = c; j < cols_; ++j) (*this)(row, j) = k.mul(s, (*this)(row, j));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      Elem f = (*this)(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols_; ++j)
        if ((*this)(row, j) != 0) (*this)(i, j) = k.sub((*this)(i, j), k.mul(f, (*this)(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t KMatrix::rank() const {
  KMatrix m = *this;
  return m.reduce().size();
}

std::vector<Vec> KMatrix::nullspace() const {
  KMatrix m = *this;
  auto pivots = m.reduce();
  const auto& k = *field_;
  std::vector<char> is_pivot(cols_, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, 0);
    v[free] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> KMatrix::solve(const Vec& b) const {
  KMatrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = aug.reduce();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x(cols_, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

std::optional<KMatrix> KMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  KMatrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = field_->one();
  }
  auto pivots = aug.reduce();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  KMatrix out(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<Vec> span_basis(const RingPtr& field, std::size_t dim, const std::vector<Vec>& vectors) {
  if (!field->is_field()) throw Error(ErrorKind::NotAField, "linear algebra needs a field", field->name());
  const auto& k = *field;
  std::vector<Vec> rows = vectors;
  std::size_t row = 0;
  for (std::size_t c = 0; c < dim && row < rows.size(); ++c) {
    std::size_t p = row;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[row]);
    rows[row] = vec_scale(k, k.inv(rows[row][c]), rows[row]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != row && rows[i][c] != 0) rows[i] = vec_sub(k, rows[i], vec_scale(k, rows[i][c], rows[row]));
    ++row;
  }
  rows.resize(row);
  return rows;
}

std::size_t span_rank(const RingPtr& field, std::size_t dim, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  KMatrix m(field, vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  return m.rank();
}

bool in_span(const RingPtr& field, std::size_t dim, const std::vector<Vec>& basis, const Vec& v) {
  auto with = basis;
  with.push_back(v);
  return span_rank(field, dim, with) == span_rank(field, dim, basis);
}

Vec vec_add(const FiniteCommRing& k, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const FiniteCommRing& k, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const FiniteCommRing& k, Elem s, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.mul(s, a[i]);
  return out;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

}  // namespace cliffordsys
