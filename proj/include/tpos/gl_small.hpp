#pragma once

#include "tpos/tori.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace tpos::gl_small {

/// GL_2: B = y_1(a) B^+ y_1(-a), B' = y_1(-c) B^+ y_1(c).
struct GL2Params {
  Rational a;
  Rational c;

  /// Throws PreconditionError unless a, c > 0.
  void validate() const;
};

/// The torus element with coordinates (t, s) in the frame of (a, c), from
/// the closed form.
Matrix gl2_torus_matrix(const GL2Params& p, const Rational& t, const Rational& s);

/// Closed-form membership criterion: t / s > 1.
bool gl2_membership(const GL2Params& p, const Rational& t, const Rational& s);

/// u = y_1(a), v = y_1(c).
TorusFrame gl2_frame(const GL2Params& p);

/// GL_3 pair u = [[1,0,0],[a,1,0],[b,c,1]], v = same with primes, both in
/// U^-_{>0} (ac > b, a'c' > b').
struct GL3Params {
  Rational a, b, c;
  Rational a_prime, b_prime, c_prime;

  void validate() const;
  /// (3,1) entry of z = u^{-1} v^{-1}: ac + a'c + a'c' - b - b'.
  Rational z_corner() const;
  /// Bottom-left 2x2 minor of z: ac' + b + b'.
  Rational z_corner_minor() const;
  Matrix u() const;
  Matrix v() const;
};

Matrix gl3_S(const GL3Params& p);
Matrix gl3_S_inverse(const GL3Params& p);

/// S diag(t, s, r) S^{-1} from closed forms, every entry verified against
/// the product.
Matrix gl3_g_entries(const GL3Params& p, const Rational& t, const Rational& s, const Rational& r);

/// Which form of the second membership condition to use. `printed` is the
/// inequality pair as published; `from_inverse` is re-derived from the
/// corner entries of g^{-1} = S diag(1/t, 1/s, 1/r) S^{-1}.
enum class ConditionReading { printed, from_inverse };

struct Gl3Conditions {
  bool a = false;
  bool b = false;
};

/// Condition (a): q1 = (t/s - 1)/(1 - r/s) exceeds C/A and
/// (ac-b)(a'c'-b')C/(bb'A). Condition (b), printed: q2 = (s/r - 1)/(1 - s/t)
/// exceeds b'/(a'c'-b') and (ac-b)/b; from_inverse: q2 exceeds A/C and
/// bb'A/((ac-b)(a'c'-b')C). Requires t > s > r > 0.
Gl3Conditions gl3_conditions(const GL3Params& p, const Rational& t, const Rational& s,
                             const Rational& r, ConditionReading reading = ConditionReading::printed);

/// One transcribed formula for an entry of g (or of the matrix the source
/// calls g'), evaluated literally.
struct PrintedForm {
  std::string entry;   // "g13", "g'31", ...
  std::string text;    // the formula as typeset
  bool of_inverse;     // compares against g^{-1} rather than g
  std::function<Rational(const GL3Params&, const Rational&, const Rational&, const Rational&)> eval;
};

const std::vector<PrintedForm>& printed_forms();

struct ReconciliationEntry {
  std::string entry;
  std::string text;
  bool agrees = true;  // equals the product oracle on every sample
  /// For g' entries: equals the same entry of S^{-1} diag(1/t,1/s,1/r) S on
  /// every sample (the matrix the printed formulas actually describe).
  bool agrees_with_swapped_conjugation = true;
  std::size_t samples = 0;
};

struct ReconciliationLog {
  std::vector<ReconciliationEntry> entries;
  std::size_t disagreeing() const;
  std::string to_text() const;
};

using Triple = std::array<Rational, 3>;

struct Gl3Sample {
  GL3Params params;
  Triple tsr;
};

ReconciliationLog reconcile_printed_forms(const std::vector<Gl3Sample>& samples);

/// Fixed B = u B^+ u^{-1} from (a, b, c); probes which eigenvalue triples
/// t > s > r are realised by elements of B cap G_{>0} over the sampled
/// (a', b', c'). Triples not strictly descending are ignored.
struct RegionReport {
  std::vector<Triple> realized;
  std::vector<Triple> unrealized;
  /// Triples violating the necessary bound (s/r-1)/(1-s/t) > (ac-b)/b.
  std::vector<Triple> bound_excluded;
  /// Bound-excluded triples that were nevertheless realised.
  std::vector<Triple> bound_excluded_realized;
};

struct LowerParams {
  Rational a, b, c;
};

RegionReport gl3_eigen_region_probe(const LowerParams& base,
                                    const std::vector<LowerParams>& partner_samples,
                                    const std::vector<Triple>& triples);

} // namespace tpos::gl_small
