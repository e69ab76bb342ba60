#include "tpos/matrix.hpp"

#include "tpos/errors.hpp"

#include <algorithm>
#include <cassert>

namespace tpos {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols) {
  if (cols.empty())
    return {};
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_)
      throw InputError("columns of unequal length");
    for (std::size_t r = 0; r < m.rows_; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

const Rational& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw BoundsError("matrix index out of range");
  return (*this)(r, c);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_)
    throw BoundsError("column block out of range");
  Matrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c)
      m(r, c) = (*this)(r, first + c);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::hcat(const Matrix& right) const {
  if (right.rows_ != rows_)
    throw InputError("hcat: row counts differ");
  Matrix m(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c)
      m(r, cols_ + c) = right(r, c);
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

bool Matrix::is_lower_unitriangular() const {
  if (!is_square())
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0))
        return false;
  return true;
}

bool Matrix::is_upper_unitriangular() const {
  return is_square() && transpose().is_lower_unitriangular();
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < std::min(r, cols_); ++c)
      if ((*this)(r, c) != 0)
        return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0)
        return false;
  return true;
}

bool Matrix::is_monomial() const {
  if (!is_square())
    return false;
  std::vector<int> col_count(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int row_count = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) {
        ++row_count;
        ++col_count[c];
      }
    if (row_count != 1)
      return false;
  }
  return std::all_of(col_count.begin(), col_count.end(), [](int k) { return k == 1; });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& k) {
  for (auto& x : data_)
    x *= k;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw InputError("matrix product: shape mismatch");
  Matrix m(a.rows(), b.cols());
  Rational acc;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (a(r, k) != 0 && b(k, c) != 0)
          acc += a(r, k) * b(k, c);
      m(r, c) = acc;
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size())
    throw InputError("matrix-vector product: shape mismatch");
  Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out[r] += a(r, k) * v[k];
  return out;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Rational& k, Matrix a) { return a *= k; }

Matrix reverse_columns(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = m(r, m.cols() - 1 - c);
  return out;
}

} // namespace tpos
