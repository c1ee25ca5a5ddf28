#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cliffordsys {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> column(std::size_t c) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Integer> apply(std::span<const Integer> v) const;
  bool operator==(const IntMatrix& other) const = default;

  bool is_diagonal() const;
  /// Exact determinant via fraction-free (Bareiss) elimination.
  Integer determinant() const;
  /// Horizontal concatenation [this | rhs].
  IntMatrix hconcat(const IntMatrix& rhs) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// S = U * M * V with U, V unimodular and S diagonal with nonnegative
/// entries d_1 | d_2 | ... (zeros last).
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Smith form together with the inverses of the transforms; used by the
/// quotient and solving routines.
struct SmithDecomposition {
  IntMatrix U, U_inv, S, V, V_inv;
  std::size_t rank = 0;
  Integer diagonal(std::size_t i) const { return i < S.rows() && i < S.cols() ? S(i, i) : Integer(0); }
};

SmithDecomposition smith_decomposition(const IntMatrix& m, bool track_row_ops = true, bool track_col_ops = true);

/// Solves M x = b over the integers; empty optional-like flag via `ok`.
struct IntegerSolution {
  bool ok = false;
  std::vector<Integer> x;
};
IntegerSolution solve_integer_system(const SmithDecomposition& smith, std::span<const Integer> b);

/// Z/B for lattices Z ⊇ B inside an ambient finite (or partly free) abelian
/// group Z^r / diag(d). Generator sets are given as matrix columns in
/// ambient coordinates; the ambient relations are added to both sides.
class Subquotient {
 public:
  static Subquotient compute(const std::vector<Integer>& ambient_factors, const IntMatrix& z_generators,
                             const IntMatrix& b_generators);

  /// Nontrivial invariant factors of Z/B (0 marks an infinite cyclic factor).
  const std::vector<Integer>& factors() const noexcept { return factors_; }
  /// Coordinates of an element of Z in the cyclic decomposition, reduced.
  /// Throws Error(NotContained) if x is not in Z.
  std::vector<Integer> project(std::span<const Integer> x) const;
  /// A representative in ambient coordinates of the j-th cyclic generator.
  std::vector<Integer> section(std::size_t j) const;
  bool contains(std::span<const Integer> x) const;

 private:
  std::vector<Integer> z_coordinates(std::span<const Integer> x, bool& ok) const;

  std::vector<Integer> ambient_;
  SmithDecomposition z_smith_;
  std::size_t z_rank_ = 0;
  SmithDecomposition y_smith_;
  std::vector<std::size_t> kept_;   // indices into y_smith_ diagonal
  std::vector<Integer> factors_;
};

}  // namespace cliffordsys
