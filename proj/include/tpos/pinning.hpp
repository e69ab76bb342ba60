#pragma once

#include "tpos/linalg.hpp"

#include <optional>
#include <vector>

namespace tpos {

/// Number of positive roots of GL_n, n(n-1)/2: the length of the longest
/// permutation and the dimension of U^{+/-}_{>0}.
constexpr std::size_t positive_root_count(std::size_t n) { return n * (n - 1) / 2; }

/// Chevalley generators of the standard pinning; i is 1-based in [1, n-1].
/// x_gen puts a at (i, i+1), y_gen at (i+1, i).
Matrix x_gen(std::size_t n, std::size_t i, const Rational& a);
Matrix y_gen(std::size_t n, std::size_t i, const Rational& a);

/// Letters of a word in the simple reflections s_1..s_{n-1} (1-based).
struct ReducedWord {
  std::size_t n = 0;
  std::vector<std::size_t> letters;

  /// The standard reduced word 1, 2 1, 3 2 1, ..., (n-1) ... 1.
  static ReducedWord standard(std::size_t n);
  ReducedWord reversed() const;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// Inversion count of the permutation s_{i_1} ... s_{i_k}; -1 if some letter
/// is out of range.
long word_length(const ReducedWord& w);

/// True iff w has nu letters and its product is the longest permutation.
bool validate_reduced_word(const ReducedWord& w);

/// Every reduced word of the longest element, lexicographic. Meant for small
/// n (16 words at n = 4, 768 at n = 5).
std::vector<ReducedWord> all_reduced_words(std::size_t n);

enum class Sign { upper, lower };

/// A point of U^+_{>0} (upper, x-generators) or U^-_{>0} (lower,
/// y-generators) in the coordinates attached to a reduced word.
struct ChevalleyWord {
  ReducedWord word;
  std::vector<Rational> params;
  Sign sign = Sign::lower;
};

/// Ordered product of generators. Throws PreconditionError on a non-reduced
/// word, a parameter count mismatch, or a non-positive parameter.
Matrix unipotent_from_word(const ChevalleyWord& c);

/// Diagonal torus element diag(t_1, ..., t_n), entries nonzero.
class TorusElement {
public:
  explicit TorusElement(std::vector<Rational> diag);

  std::size_t n() const { return diag_.size(); }
  const std::vector<Rational>& diag() const { return diag_; }
  const Rational& operator[](std::size_t i) const { return diag_[i]; }
  bool is_positive() const;
  Matrix matrix() const { return Matrix::diagonal(diag_); }

  friend bool operator==(const TorusElement&, const TorusElement&) = default;

private:
  std::vector<Rational> diag_;
};

/// u_plus * diag(t) * u_minus.
Matrix g_pos_from_factors(const ChevalleyWord& u_plus, const TorusElement& t,
                          const ChevalleyWord& u_minus);

struct MinorWitness {
  MinorIndex index;
  Rational value;
};

/// Outcome of a positivity test; a failed test names the first offending
/// minor in scan order (order, then rows, then columns).
struct PositivityReport {
  bool verdict = false;
  std::optional<MinorWitness> witness;

  explicit operator bool() const { return verdict; }
};

/// Exhaustive scan: g is totally positive iff every minor of every order is
/// strictly positive.
PositivityReport is_in_G_pos(const Matrix& g);

/// Same verdict from the solid minors only (contiguous rows and columns).
PositivityReport is_in_G_pos_solid(const Matrix& g);

/// Unitriangular positivity: for lower u, the minors with sorted rows r and
/// columns c such that c_j <= r_j for all j must be positive and every other
/// minor must vanish. Upper is the transpose. Throws PreconditionError when u
/// is not unitriangular of the given sign.
PositivityReport is_in_U_pos(const Matrix& u, Sign sign);

/// The U_{<0} test: u^{-1} lies in U_{>0}.
PositivityReport is_in_U_neg(const Matrix& u, Sign sign);

/// Whether a minor is not identically zero on lower unitriangular matrices.
bool lower_minor_nontrivial(const MinorIndex& idx);

/// Simple-root character: t x_i(a) t^{-1} = x_i(chi_i(t) a), i.e. t_i / t_{i+1}.
Rational chi(std::size_t i, const TorusElement& t);

/// t in T_{>0} and chi_i(t) > p for all i. Throws PreconditionError if p <= 0.
bool is_in_T_p_pos(const TorusElement& t, const Rational& p);

/// Recovers the parameters of u along `word` exactly, if u factors as the
/// ordered product of generators of the given sign with nonzero parameters.
/// Positivity of the parameters is for the caller to judge.
std::optional<std::vector<Rational>> factor_along_word(const Matrix& u, const ReducedWord& word,
                                                       Sign sign);

} // namespace tpos
