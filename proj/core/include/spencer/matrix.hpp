#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "spencer/rational.hpp"

namespace spencer {

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  /// max |entry|, zero for an empty matrix.
  Rational max_abs_entry() const;

  std::size_t rank() const;
  /// Basis of the null space, as the columns of the returned matrix.
  Matrix nullspace() const;
  /// Basis of the column space (pivot columns of the original matrix).
  Matrix column_space() const;
  Rational determinant() const;
  /// Throws ValidationError for singular or non-square input.
  Matrix inverse() const;
  /// All leading principal minors positive; exact Sylvester test.
  bool is_positive_definite() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(Matrix lhs, const Rational& s) { return lhs *= s; }
  friend Matrix operator*(const Rational& s, Matrix rhs) { return rhs *= s; }
  friend std::vector<Rational> operator*(const Matrix& lhs, const std::vector<Rational>& v);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref_in_place();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Horizontal concatenation [a | b]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);

}  // namespace spencer
