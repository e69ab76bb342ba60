#pragma once

#include "tpos/pinning.hpp"

#include <functional>
#include <optional>

namespace tpos {

/// A complete flag, i.e. a Borel subgroup: the k-th subspace is the span of
/// the first k columns of `basis`. Two bases give the same flag iff they
/// differ by an invertible upper triangular right factor.
class BorelPoint {
public:
  /// Throws PreconditionError if basis is not square and invertible.
  explicit BorelPoint(Matrix basis);

  std::size_t n() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }
  /// The lower unitriangular L with basis = L * (upper triangular), when
  /// every leading principal minor of the basis is nonzero.
  const std::optional<Matrix>& canonical_lower() const { return canonical_lower_; }

  /// Same flag: basis^{-1} * other.basis is upper triangular.
  bool same_flag(const BorelPoint& other) const;
  /// g maps every subspace of the flag into itself.
  bool is_stabilized_by(const Matrix& g) const;

  static BorelPoint standard(std::size_t n);
  static BorelPoint anti_standard(std::size_t n);

private:
  Matrix basis_;
  std::optional<Matrix> canonical_lower_;
};

/// u B^+ u^{-1} for lower unitriangular u.
BorelPoint borel_from_lower(const Matrix& u);

/// B in B_{>0}: the canonical representative lies in U^-_{>0}.
bool is_in_B_pos(const BorelPoint& b);
/// B in B_{<0}: the canonical representative u satisfies u^{-1} in U^-_{>0}.
bool is_in_B_neg(const BorelPoint& b);

/// The bijection U^-_{<0} -> U^+_{<0}, u -> u~ with u B^+ u^{-1} = u~ B^- u~^{-1}:
/// span of the first k columns of u equals span of the last k columns of u~.
/// Throws PreconditionError unless u is lower unitriangular with
/// u^{-1} in U^-_{>0}.
Matrix tilde_map(const Matrix& u);

/// The span-matching solve behind tilde_map without the positivity
/// precondition. Throws InvariantViolation when some bottom-left minor of u
/// vanishes, in which case no u~ exists.
Matrix tilde_map_unchecked(const Matrix& u);

/// Exact rank check of the tilde postcondition.
bool tilde_relation_holds(const Matrix& u, const Matrix& u_tilde);

using TildeFn = std::function<Matrix(const Matrix&)>;

/// For every k, the first k columns of B and the first n-k columns of B'
/// together form an invertible matrix.
bool are_opposed(const BorelPoint& b, const BorelPoint& b_prime);

/// A point of B^2_{>0} = B_{>0} x B_{<0}. Construction verifies both
/// memberships and throws PreconditionError otherwise.
class FlagPairClass {
public:
  FlagPairClass(BorelPoint first, BorelPoint second);

  const BorelPoint& first() const { return first_; }
  const BorelPoint& second() const { return second_; }
  /// u in U^-_{>0} with first = u B^+ u^{-1}.
  const Matrix& u() const { return *first_.canonical_lower(); }
  /// v in U^-_{>0} with second = v^{-1} B^+ v.
  const Matrix& v() const { return v_; }

private:
  BorelPoint first_;
  BorelPoint second_;
  Matrix v_;
};

} // namespace tpos
