#include "spencer/matrix.hpp"

#include <sstream>

#include "spencer/error.hpp"

namespace spencer {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw ValidationError("matrix data size does not match its shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Rational(1);
  return out;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
  Matrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ValidationError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Rational Matrix::max_abs_entry() const {
  Rational out(0);
  for (const auto& x : data_) {
    const Rational a = x.abs();
    if (a > out) out = a;
  }
  return out;
}

std::vector<std::size_t> Matrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(p, c), (*this)(row, c));
    const Rational inv = (*this)(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      const Rational f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref_in_place().size();
}

Matrix Matrix::nullspace() const {
  Matrix reduced = *this;
  const std::vector<std::size_t> pivots = reduced.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return from_columns(cols_, basis);
}

Matrix Matrix::column_space() const {
  Matrix reduced = *this;
  const std::vector<std::size_t> pivots = reduced.rref_in_place();
  std::vector<std::vector<Rational>> basis;
  for (std::size_t p : pivots) basis.push_back(column(p));
  return from_columns(rows_, basis);
}

Rational Matrix::determinant() const {
  if (!is_square()) throw ValidationError("determinant of a non-square matrix");
  Matrix m = *this;
  Rational det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && m(p, col).is_zero()) ++p;
    if (p == rows_) return Rational(0);
    if (p != col) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw ValidationError("inverse of a non-square matrix");
  Matrix aug = hstack(*this, identity(rows_));
  const std::vector<std::size_t> pivots = aug.rref_in_place();
  if (pivots.size() < rows_ || (rows_ > 0 && pivots[rows_ - 1] >= cols_))
    throw ValidationError("matrix is singular");
  Matrix out(rows_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rows_; ++c) out(r, c) = aug(r, cols_ + c);
  return out;
}

bool Matrix::is_positive_definite() const {
  if (!is_symmetric()) return false;
  // Gaussian elimination without pivoting: every pivot is a ratio of
  // consecutive leading principal minors.
  Matrix m = *this;
  for (std::size_t k = 0; k < rows_; ++k) {
    if (m(k, k).sign() <= 0) return false;
    const Rational inv = m(k, k).inverse();
    for (std::size_t r = k + 1; r < rows_; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) * inv;
      for (std::size_t c = k; c < cols_; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return true;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_)
    throw ValidationError("matrix shape mismatch in product: " + std::to_string(lhs.rows_) + "x" +
                          std::to_string(lhs.cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                          std::to_string(rhs.cols_));
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Rational> operator*(const Matrix& lhs, const std::vector<Rational>& v) {
  if (lhs.cols_ != v.size()) throw ValidationError("matrix-vector shape mismatch");
  std::vector<Rational> out(lhs.rows_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k)
      if (!lhs(i, k).is_zero()) out[i] += lhs(i, k) * v[k];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " [");
    for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : ", ") << (*this)(r, c);
    os << "]" << (r + 1 < rows_ ? "\n" : "");
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

}  // namespace spencer
