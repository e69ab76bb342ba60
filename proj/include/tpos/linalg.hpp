#pragma once

#include "tpos/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tpos {

/// Row and column selection for a minor. Indices are 0-based and strictly
/// increasing; the 1-based form is only used for display.
struct MinorIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t order() const { return rows.size(); }
  /// "rows{1,2} cols{2,3}" (1-based).
  std::string to_string() const;
  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

/// Throws BoundsError unless idx is well-formed for an n x n matrix.
void check_minor_index(const MinorIndex& idx, std::size_t n);

Rational minor(const Matrix& g, const MinorIndex& idx);

/// Fraction-free (Bareiss) elimination with row pivoting.
Rational determinant(const Matrix& g);

/// Throws SingularMatrixError when det(g) = 0.
Matrix inverse(const Matrix& g);

/// Solves g x = b for square invertible g.
Vector solve(const Matrix& g, const Vector& b);

std::size_t rank(const Matrix& g);

/// Basis of the right null space, one vector per free column of the RREF.
std::vector<Vector> kernel_basis(const Matrix& g);

/// Monic characteristic polynomial, coefficients low to high:
/// p(x) = c[0] + c[1] x + ... + c[n] x^n, c[n] = 1.
/// Computed via exact Hessenberg reduction.
std::vector<Rational> char_poly(const Matrix& g);

Rational evaluate(const std::vector<Rational>& poly, const Rational& x);
Matrix evaluate(const std::vector<Rational>& poly, const Matrix& x);

/// All rational roots of a polynomial with rational coefficients (low to
/// high), repeated by multiplicity, sorted descending.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

/// Every minor of a square matrix, keyed by row and column bitmasks. Built
/// by Laplace expansion along the first selected row, reusing the minors of
/// the previous order; the hot path of the exhaustive positivity scan.
class MinorTable {
public:
  explicit MinorTable(const Matrix& g);

  std::size_t n() const { return n_; }
  const Rational& get(std::uint32_t row_mask, std::uint32_t col_mask) const;
  Rational get(const MinorIndex& idx) const;

  /// Visits minors by order, then rows, then columns (lexicographic on the
  /// sorted index lists). Stops early when f returns false.
  template <typename F> void for_each(F&& f) const;

private:
  std::size_t n_;
  // table_[k][rank(row set)][rank(col set)] for k-subsets.
  std::vector<std::vector<std::uint32_t>> subsets_;   // k -> masks, lexicographic
  std::vector<std::vector<std::size_t>> position_;     // k -> mask -> position
  std::vector<std::vector<Rational>> values_;          // k -> flat (rows x cols)
};

MinorIndex minor_index_from_masks(std::uint32_t row_mask, std::uint32_t col_mask);

template <typename F> void MinorTable::for_each(F&& f) const {
  for (std::size_t k = 1; k <= n_; ++k) {
    const auto& subs = subsets_[k];
    const std::size_t m = subs.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!f(subs[i], subs[j], values_[k][i * m + j]))
          return;
  }
}

} // namespace tpos
