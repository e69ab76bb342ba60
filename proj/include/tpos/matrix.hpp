#pragma once

#include "tpos/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tpos {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix. Group elements, frames and flag bases
/// are square; rectangular shapes appear only inside eliminations.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  explicit Matrix(std::size_t n) : Matrix(n, n) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> d);
  static Matrix from_columns(std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t size() const { return rows_; }

  // 0-based access.
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Bounds-checked 0-based access; throws BoundsError.
  const Rational& at(std::size_t r, std::size_t c) const;

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix transpose() const;
  /// Horizontal concatenation.
  Matrix hcat(const Matrix& right) const;

  bool is_zero() const;
  bool is_lower_unitriangular() const;
  bool is_upper_unitriangular() const;
  bool is_upper_triangular() const;
  bool is_diagonal() const;
  /// Exactly one nonzero entry in every row and column.
  bool is_monomial() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& k);

  const std::vector<Rational>& data() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Rational& k, Matrix a);

/// Reverses column order: m * w0 for the longest permutation matrix w0.
Matrix reverse_columns(const Matrix& m);

} // namespace tpos
