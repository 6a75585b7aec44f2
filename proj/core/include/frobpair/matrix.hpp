#pragma once

#include <optional>
#include <vector>

#include "frobpair/field.hpp"

namespace frobpair {

/// Dense matrix with exact Scalar entries. Shapes may be 0 in either
/// dimension (empty matrices compose as expected).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
      : rows_(rows), cols_(cols), field_(field), a_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(std::size_t n, const FieldSpec& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { a_[r * cols_ + c] = std::move(v); }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Matrix product; throws ShapeError on inner-dimension mismatch.
  Matrix mul(const Matrix& o) const;

  /// Exact two-sided inverse via Gauss-Jordan, or nullopt if singular.
  /// On failure *bad_col (if given) receives the first pivot column with no
  /// usable pivot.
  std::optional<Matrix> inverse(std::size_t* bad_col = nullptr) const;

  /// A nonzero kernel vector if the matrix is singular (or non-square with a
  /// nontrivial nullspace), else nullopt.
  std::optional<std::vector<Scalar>> kernel_vector() const;

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

}  // namespace frobpair
