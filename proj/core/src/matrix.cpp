#include "frobpair/matrix.hpp"

namespace frobpair {

Matrix Matrix::identity(std::size_t n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw ShapeError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                     std::to_string(o.cols_));
  }
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.set(i, j, r.at(i, j) + x * y);
      }
    }
  }
  return r;
}

std::optional<Matrix> Matrix::inverse(std::size_t* bad_col) const {
  if (rows_ != cols_) {
    if (bad_col) *bad_col = 0;
    return std::nullopt;
  }
  std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(n, field_);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      if (bad_col) *bad_col = col;
      return std::nullopt;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.a_[pivot * n + j], a.a_[col * n + j]);
        std::swap(inv.a_[pivot * n + j], inv.a_[col * n + j]);
      }
    }
    Scalar d = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.set(col, j, a.at(col, j) * d);
      inv.set(col, j, inv.at(col, j) * d);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.set(i, j, a.at(i, j) - f * a.at(col, j));
        inv.set(i, j, inv.at(i, j) - f * inv.at(col, j));
      }
    }
  }
  return inv;
}

std::optional<std::vector<Scalar>> Matrix::kernel_vector() const {
  // Row-reduce a working copy, tracking pivot columns.
  Matrix a = *this;
  std::vector<std::size_t> pivot_of_row;
  std::size_t row = 0;
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a.a_[pivot * cols_ + j], a.a_[row * cols_ + j]);
    }
    Scalar d = a.at(row, col).inverse();
    for (std::size_t j = 0; j < cols_; ++j) a.set(row, j, a.at(row, j) * d);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = 0; j < cols_; ++j) a.set(i, j, a.at(i, j) - f * a.at(row, j));
    }
    is_pivot[col] = true;
    pivot_of_row.push_back(col);
    ++row;
  }
  std::size_t free_col = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col == cols_) return std::nullopt;
  std::vector<Scalar> v(cols_, Scalar::zero(field_));
  v[free_col] = Scalar::one(field_);
  for (std::size_t r = 0; r < pivot_of_row.size(); ++r) {
    v[pivot_of_row[r]] = -a.at(r, free_col);
  }
  return v;
}

}  // namespace frobpair
