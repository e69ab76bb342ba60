#pragma once

#include "tpos/tori.hpp"

#include <vector>

namespace tpos {

/// Thresholds for the floating fallback.
struct FloatTolerance {
  double residual = 1e-10;    // max_i |g v - lambda v|_inf / |v|_inf
  double separation = 1e-9;   // min gap between consecutive eigenvalues
};

/// Spectral data of g in G_{>0}. Eigenvalues are sorted strictly
/// descending and column i of `vectors` spans the eigenline of value i.
/// On the floating path `values` holds the exact rational images of the
/// double eigenvalues and `vectors` the rationalised double eigenvectors.
struct EigenData {
  bool exact = false;
  std::vector<Rational> values;
  Matrix vectors;
  std::vector<double> approx_values;
  double residual = 0.0;  // 0 on the exact path
};

/// Full eigendecomposition. Exact when the characteristic polynomial splits
/// over Q, floating otherwise. Throws PreconditionError if g is not totally
/// positive, InvariantViolation on a repeated or non-positive exact
/// eigenvalue, NumericalFailure when the fallback misses its bounds.
EigenData eigen_split(const Matrix& g, const FloatTolerance& tol = {});

/// (B, B'): the eigenflags of g in descending and ascending eigenvalue
/// order, checked to lie in B_{>0} and B_{<0}.
FlagPairClass pi_prime(const Matrix& g, const FloatTolerance& tol = {});

/// Frame of eigenvectors; the connected centraliser of g.
TorusFrame pi(const Matrix& g, const FloatTolerance& tol = {});

/// g stabilises the flag of b and b is in B_{>0}. With tolerance > 0 the
/// stabilisation check accepts a strictly lower part of basis^{-1} g basis
/// up to tolerance times its largest entry (for rationalised floating flags).
bool verify_unique_borel(const Matrix& g, const BorelPoint& b, double tolerance = 0.0);

/// The B_{<0} counterpart: g_inverse stabilises b and b is in B_{<0}.
bool verify_unique_borel_neg(const Matrix& g_inverse, const BorelPoint& b, double tolerance = 0.0);

/// Matrix of X -> g X g^{-1} on gl_n in the basis E_11, E_12, ..., E_nn.
Matrix adjoint_action(const Matrix& g);

} // namespace tpos
