#include "tpos/tori.hpp"

#include "tpos/errors.hpp"

namespace tpos {

TorusFrame::TorusFrame(Matrix s, std::optional<Provenance> provenance)
    : s_(std::move(s)), provenance_(std::move(provenance)) {
  if (!s_.is_square() || s_.size() == 0)
    throw PreconditionError("torus frame must be a nonempty square matrix");
  try {
    s_inv_ = inverse(s_);
  } catch (const SingularMatrixError&) {
    throw PreconditionError("torus frame must be invertible");
  }
}

bool conjugation_certificate(const TorusFrame& f, const BorelPoint& b, const BorelPoint& b_prime) {
  const std::size_t n = f.n();
  if (b.n() != n || b_prime.n() != n)
    return false;
  if (!(f.s_inverse() * b.basis()).is_upper_triangular())
    return false;
  // The anti-standard flag: the first k columns live in span(e_{n-k+1..n}).
  Matrix y = f.s_inverse() * b_prime.basis();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; r + c + 1 < n; ++c)
      if (y(r, c) != 0)
        return false;
  return true;
}

TorusFrame intersect_borels(const BorelPoint& b, const BorelPoint& b_prime, const TildeFn& tilde) {
  if (b.n() != b_prime.n())
    throw PreconditionError("flags of different sizes");
  if (!is_in_B_pos(b))
    throw PreconditionError("intersect_borels: B is not in B_{>0}");
  if (!is_in_B_neg(b_prime))
    throw PreconditionError("intersect_borels: B' is not in B_{<0}");
  const Matrix& u = *b.canonical_lower();
  const Matrix& v_inv = *b_prime.canonical_lower();
  Matrix z = inverse(u) * v_inv;
  TorusFrame frame(u * tilde(z), TorusFrame::Provenance{u, inverse(v_inv)});
  if (!conjugation_certificate(frame, b, b_prime))
    throw InvariantViolation("intersect_borels: frame does not conjugate (B, B') to (B+, B-)");
  return frame;
}

TorusFrame iota(const FlagPairClass& pair, const TildeFn& tilde) {
  return intersect_borels(pair.first(), pair.second(), tilde);
}

TorusFrame frame_from_unipotents(const Matrix& u, const Matrix& v, const TildeFn& tilde) {
  return intersect_borels(borel_from_lower(u), borel_from_lower(inverse(v)), tilde);
}

Matrix torus_element(const TorusFrame& f, const TorusElement& d) {
  if (d.n() != f.n())
    throw PreconditionError("torus element size does not match the frame");
  Matrix sd = f.s();
  for (std::size_t r = 0; r < f.n(); ++r)
    for (std::size_t c = 0; c < f.n(); ++c)
      sd(r, c) *= d[c];
  return sd * f.s_inverse();
}

bool same_torus(const TorusFrame& f1, const TorusFrame& f2) {
  if (f1.n() != f2.n())
    return false;
  return (f2.s_inverse() * f1.s()).is_monomial();
}

TorusElement torus_coordinates(const TorusFrame& f, const Matrix& g) {
  if (!g.is_square() || g.size() != f.n())
    throw PreconditionError("matrix size does not match the frame");
  Matrix d = f.s_inverse() * g * f.s();
  if (!d.is_diagonal())
    throw PreconditionError("matrix is not in the torus of this frame");
  std::vector<Rational> diag(f.n());
  for (std::size_t i = 0; i < f.n(); ++i)
    diag[i] = d(i, i);
  return TorusElement(std::move(diag));
}

bool cone_membership(const TorusFrame& f, const Matrix& g, const Rational& p) {
  return is_in_T_p_pos(torus_coordinates(f, g), p);
}

} // namespace tpos
