#include "tpos/flags.hpp"

#include "tpos/errors.hpp"

namespace tpos {

namespace {

// Doolittle elimination without pivoting; nullopt when a leading principal
// minor vanishes.
std::optional<Matrix> lower_factor(const Matrix& basis) {
  const std::size_t n = basis.size();
  Matrix work = basis;
  Matrix lower = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (work(k, k) == 0)
      return std::nullopt;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (work(r, k) == 0)
        continue;
      Rational f = work(r, k) / work(k, k);
      lower(r, k) = f;
      for (std::size_t c = k; c < n; ++c)
        work(r, c) -= f * work(k, c);
    }
  }
  return lower;
}

} // namespace

BorelPoint::BorelPoint(Matrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square() || basis_.size() == 0)
    throw PreconditionError("flag basis must be a nonempty square matrix");
  if (rank(basis_) != basis_.size())
    throw PreconditionError("flag basis must be invertible");
  canonical_lower_ = lower_factor(basis_);
}

bool BorelPoint::same_flag(const BorelPoint& other) const {
  if (other.n() != n())
    return false;
  return (inverse(basis_) * other.basis_).is_upper_triangular();
}

bool BorelPoint::is_stabilized_by(const Matrix& g) const {
  if (!g.is_square() || g.size() != n())
    throw PreconditionError("size mismatch");
  return (inverse(basis_) * g * basis_).is_upper_triangular();
}

BorelPoint BorelPoint::standard(std::size_t n) { return BorelPoint(Matrix::identity(n)); }

BorelPoint BorelPoint::anti_standard(std::size_t n) {
  return BorelPoint(reverse_columns(Matrix::identity(n)));
}

BorelPoint borel_from_lower(const Matrix& u) {
  if (!u.is_lower_unitriangular())
    throw PreconditionError("borel_from_lower: matrix is not lower unitriangular");
  return BorelPoint(u);
}

bool is_in_B_pos(const BorelPoint& b) {
  const auto& l = b.canonical_lower();
  return l && is_in_U_pos(*l, Sign::lower).verdict;
}

bool is_in_B_neg(const BorelPoint& b) {
  const auto& l = b.canonical_lower();
  return l && is_in_U_neg(*l, Sign::lower).verdict;
}

Matrix tilde_map_unchecked(const Matrix& u) {
  if (!u.is_lower_unitriangular())
    throw PreconditionError("tilde_map: matrix is not lower unitriangular");
  const std::size_t n = u.size();
  // Column j of M = u~ w0 is u c_j with c_j supported on the first j+1
  // coordinates, a 1 in row n-1-j and zeros below it.
  Matrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = j + 1;
    Matrix block(k);
    Vector rhs(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        block(r, c) = u(n - k + r, c);
    rhs[0] = 1;
    Vector coeffs;
    try {
      coeffs = solve(block, rhs);
    } catch (const SingularMatrixError&) {
      throw InvariantViolation("tilde_map: flag is not graphable over the anti-standard flag");
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < k; ++c)
        m(r, j) += u(r, c) * coeffs[c];
  }
  return reverse_columns(m);
}

bool tilde_relation_holds(const Matrix& u, const Matrix& u_tilde) {
  const std::size_t n = u.size();
  if (u_tilde.size() != n || !u_tilde.is_upper_unitriangular())
    return false;
  for (std::size_t k = 1; k <= n; ++k)
    if (rank(u.column_block(0, k).hcat(u_tilde.column_block(n - k, k))) != k)
      return false;
  return true;
}

Matrix tilde_map(const Matrix& u) {
  if (!u.is_lower_unitriangular())
    throw PreconditionError("tilde_map: matrix is not lower unitriangular");
  if (!is_in_U_neg(u, Sign::lower))
    throw PreconditionError("tilde_map: input is not in U^-_{<0}");
  Matrix t = tilde_map_unchecked(u);
  if (!tilde_relation_holds(u, t))
    throw InvariantViolation("tilde_map: span matching failed");
  return t;
}

bool are_opposed(const BorelPoint& b, const BorelPoint& b_prime) {
  const std::size_t n = b.n();
  if (b_prime.n() != n)
    return false;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix m = b.basis().column_block(0, k).hcat(b_prime.basis().column_block(0, n - k));
    if (determinant(m) == 0)
      return false;
  }
  return true;
}

FlagPairClass::FlagPairClass(BorelPoint first, BorelPoint second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.n() != second_.n())
    throw PreconditionError("flag pair of different sizes");
  if (!is_in_B_pos(first_))
    throw PreconditionError("first flag is not in B_{>0}");
  if (!is_in_B_neg(second_))
    throw PreconditionError("second flag is not in B_{<0}");
  v_ = inverse(*second_.canonical_lower());
}

} // namespace tpos
