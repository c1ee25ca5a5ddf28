#pragma once

#include <optional>
#include <vector>

#include "cliffordsys/ring.hpp"

namespace cliffordsys {

/// Coordinate vector over a finite ring.
using Vec = std::vector<Elem>;

/// Dense matrix over a finite field. Construction throws NotAField for any
/// other ring.
class KMatrix {
 public:
  KMatrix(RingPtr field, std::size_t rows, std::size_t cols);
  static KMatrix identity(RingPtr field, std::size_t n);
  static KMatrix from_columns(RingPtr field, std::size_t rows, const std::vector<Vec>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const RingPtr& field() const noexcept { return field_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  KMatrix operator*(const KMatrix& other) const;
  Vec apply(const Vec& x) const;
  bool operator==(const KMatrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_; }

  std::size_t rank() const;
  /// Basis of {x : Mx = 0}; one vector per free column of the reduced
  /// row echelon form, with a 1 at that column.
  std::vector<Vec> nullspace() const;
  std::optional<Vec> solve(const Vec& b) const;
  std::optional<KMatrix> inverse() const;

 private:
  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> reduce();

  RingPtr field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

/// Reduced echelon basis of the span of `vectors` (all of length `dim`).
std::vector<Vec> span_basis(const RingPtr& field, std::size_t dim, const std::vector<Vec>& vectors);
/// dim span(vectors).
std::size_t span_rank(const RingPtr& field, std::size_t dim, const std::vector<Vec>& vectors);
/// Whether v lies in the span of `basis`.
bool in_span(const RingPtr& field, std::size_t dim, const std::vector<Vec>& basis, const Vec& v);

Vec vec_add(const FiniteCommRing& k, const Vec& a, const Vec& b);
Vec vec_sub(const FiniteCommRing& k, const Vec& a, const Vec& b);
Vec vec_scale(const FiniteCommRing& k, Elem s, const Vec& a);
bool vec_is_zero(const Vec& a);

}  // namespace cliffordsys
