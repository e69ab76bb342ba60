#pragma once

#include "tpos/flags.hpp"

#include <optional>
#include <utility>

namespace tpos {

/// A maximal torus presented as S T_diag S^{-1}. Frames built from a flag
/// pair remember the pair's (u, v).
class TorusFrame {
public:
  struct Provenance {
    Matrix u;
    Matrix v;
  };

  /// Throws PreconditionError if S is singular.
  explicit TorusFrame(Matrix s, std::optional<Provenance> provenance = std::nullopt);

  std::size_t n() const { return s_.size(); }
  const Matrix& s() const { return s_; }
  const Matrix& s_inverse() const { return s_inv_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }

private:
  Matrix s_;
  Matrix s_inv_;
  std::optional<Provenance> provenance_;
};

/// B cap B' for B in B_{>0}, B' in B_{<0}: with B = u B^+ u^{-1},
/// B' = v^{-1} B^+ v, returns S = u * tilde(u^{-1} v^{-1}). Checks exactly
/// that S^{-1} B S = B^+ and S^{-1} B' S = B^-.
TorusFrame intersect_borels(const BorelPoint& b, const BorelPoint& b_prime,
                            const TildeFn& tilde = tilde_map);

/// The injection B^2_{>0} -> space of maximal tori.
TorusFrame iota(const FlagPairClass& pair, const TildeFn& tilde = tilde_map);

/// Frame for a (u, v) pair in U^-_{>0} x U^-_{>0} directly.
TorusFrame frame_from_unipotents(const Matrix& u, const Matrix& v,
                                 const TildeFn& tilde = tilde_map);

/// S diag(d) S^{-1}.
Matrix torus_element(const TorusFrame& f, const TorusElement& d);

/// F2^{-1} F1 is monomial.
bool same_torus(const TorusFrame& f1, const TorusFrame& f2);

/// S^{-1} B S is the standard flag and S^{-1} B' S is the anti-standard flag.
bool conjugation_certificate(const TorusFrame& f, const BorelPoint& b, const BorelPoint& b_prime);

/// The diagonal of S^{-1} g S; throws PreconditionError (domain error) when
/// g is not in the torus of f.
TorusElement torus_coordinates(const TorusFrame& f, const Matrix& g);

/// g in S T^p_{>0} S^{-1}.
bool cone_membership(const TorusFrame& f, const Matrix& g, const Rational& p);

} // namespace tpos
