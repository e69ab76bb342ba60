#include "tpos/pinning.hpp"

#include "tpos/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tpos {

namespace {

void check_generator(std::size_t n, std::size_t i) {
  if (n < 2 || i < 1 || i > n - 1)
    throw BoundsError("generator index " + std::to_string(i) + " out of range for n = " +
                      std::to_string(n));
}

} // namespace

Matrix x_gen(std::size_t n, std::size_t i, const Rational& a) {
  check_generator(n, i);
  Matrix m = Matrix::identity(n);
  m(i - 1, i) = a;
  return m;
}

Matrix y_gen(std::size_t n, std::size_t i, const Rational& a) {
  check_generator(n, i);
  Matrix m = Matrix::identity(n);
  m(i, i - 1) = a;
  return m;
}

ReducedWord ReducedWord::standard(std::size_t n) {
  ReducedWord w{n, {}};
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = k; i >= 1; --i)
      w.letters.push_back(i);
  return w;
}

ReducedWord ReducedWord::reversed() const {
  return {n, std::vector<std::size_t>(letters.rbegin(), letters.rend())};
}

long word_length(const ReducedWord& w) {
  // perm[j] = image of j under s_{i_1} o ... o s_{i_k}; right multiplication
  // by s_i swaps the images of i and i+1.
  std::vector<std::size_t> perm(w.n);
  std::iota(perm.begin(), perm.end(), 0);
  for (auto i : w.letters) {
    if (i < 1 || i >= w.n)
      return -1;
    std::swap(perm[i - 1], perm[i]);
  }
  long inversions = 0;
  for (std::size_t a = 0; a < w.n; ++a)
    for (std::size_t b = a + 1; b < w.n; ++b)
      if (perm[a] > perm[b])
        ++inversions;
  return inversions;
}

bool validate_reduced_word(const ReducedWord& w) {
  const auto nu = positive_root_count(w.n);
  return w.n >= 1 && w.letters.size() == nu && word_length(w) == static_cast<long>(nu);
}

namespace {

void extend_words(std::size_t n, std::vector<std::size_t>& perm, ReducedWord& prefix,
                  std::vector<ReducedWord>& out) {
  if (prefix.letters.size() == positive_root_count(n)) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = 1; i < n; ++i) {
    // Right multiplication by s_i lengthens iff perm(i) < perm(i+1).
    if (perm[i - 1] > perm[i])
      continue;
    std::swap(perm[i - 1], perm[i]);
    prefix.letters.push_back(i);
    extend_words(n, perm, prefix, out);
    prefix.letters.pop_back();
    std::swap(perm[i - 1], perm[i]);
  }
}

} // namespace

std::vector<ReducedWord> all_reduced_words(std::size_t n) {
  std::vector<ReducedWord> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ReducedWord prefix{n, {}};
  extend_words(n, perm, prefix, out);
  return out;
}

Matrix unipotent_from_word(const ChevalleyWord& c) {
  if (!validate_reduced_word(c.word))
    throw PreconditionError("not a reduced word for the longest element");
  if (c.params.size() != c.word.letters.size())
    throw PreconditionError("parameter count does not match word length");
  const std::size_t n = c.word.n;
  Matrix m = Matrix::identity(n);
  for (std::size_t k = 0; k < c.params.size(); ++k) {
    const Rational& a = c.params[k];
    if (a <= 0)
      throw PreconditionError("non-positive parameter " + to_display_string(a));
    const std::size_t i = c.word.letters[k];
    // Right multiplication by a generator is a single column operation.
    if (c.sign == Sign::lower) {
      for (std::size_t r = 0; r < n; ++r)
        m(r, i - 1) += a * m(r, i);
    } else {
      for (std::size_t r = 0; r < n; ++r)
        m(r, i) += a * m(r, i - 1);
    }
  }
  return m;
}

TorusElement::TorusElement(std::vector<Rational> diag) : diag_(std::move(diag)) {
  if (diag_.empty())
    throw PreconditionError("empty torus element");
  for (const auto& d : diag_)
    if (d == 0)
      throw PreconditionError("torus element with a zero entry");
}

bool TorusElement::is_positive() const {
  return std::all_of(diag_.begin(), diag_.end(), [](const Rational& d) { return d > 0; });
}

Matrix g_pos_from_factors(const ChevalleyWord& u_plus, const TorusElement& t,
                          const ChevalleyWord& u_minus) {
  if (u_plus.sign != Sign::upper || u_minus.sign != Sign::lower)
    throw PreconditionError("expected an upper word, then a lower word");
  if (!t.is_positive())
    throw PreconditionError("torus factor is not in T_{>0}");
  if (u_plus.word.n != t.n() || u_minus.word.n != t.n())
    throw PreconditionError("factor sizes differ");
  return unipotent_from_word(u_plus) * t.matrix() * unipotent_from_word(u_minus);
}

PositivityReport is_in_G_pos(const Matrix& g) {
  if (!g.is_square())
    throw InputError("positivity test of a non-square matrix");
  MinorTable table(g);
  PositivityReport report{true, std::nullopt};
  table.for_each([&](std::uint32_t rm, std::uint32_t cm, const Rational& v) {
    if (v > 0)
      return true;
    report.verdict = false;
    report.witness = MinorWitness{minor_index_from_masks(rm, cm), v};
    return false;
  });
  return report;
}

PositivityReport is_in_G_pos_solid(const Matrix& g) {
  if (!g.is_square())
    throw InputError("positivity test of a non-square matrix");
  const std::size_t n = g.size();
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t r0 = 0; r0 + k <= n; ++r0)
      for (std::size_t c0 = 0; c0 + k <= n; ++c0) {
        MinorIndex idx;
        for (std::size_t j = 0; j < k; ++j) {
          idx.rows.push_back(r0 + j);
          idx.cols.push_back(c0 + j);
        }
        Rational v = minor(g, idx);
        if (v <= 0)
          return {false, MinorWitness{std::move(idx), std::move(v)}};
      }
  return {true, std::nullopt};
}

bool lower_minor_nontrivial(const MinorIndex& idx) {
  for (std::size_t j = 0; j < idx.order(); ++j)
    if (idx.cols[j] > idx.rows[j])
      return false;
  return true;
}

PositivityReport is_in_U_pos(const Matrix& u, Sign sign) {
  const bool ok = sign == Sign::lower ? u.is_lower_unitriangular() : u.is_upper_unitriangular();
  if (!ok)
    throw PreconditionError(sign == Sign::lower ? "matrix is not lower unitriangular"
                                                : "matrix is not upper unitriangular");
  const Matrix lower = sign == Sign::lower ? u : u.transpose();
  MinorTable table(lower);
  PositivityReport report{true, std::nullopt};
  table.for_each([&](std::uint32_t rm, std::uint32_t cm, const Rational& v) {
    MinorIndex idx = minor_index_from_masks(rm, cm);
    const bool nontrivial = lower_minor_nontrivial(idx);
    if (nontrivial ? v > 0 : v == 0)
      return true;
    if (sign == Sign::upper)
      std::swap(idx.rows, idx.cols);
    report.verdict = false;
    report.witness = MinorWitness{std::move(idx), v};
    return false;
  });
  return report;
}

PositivityReport is_in_U_neg(const Matrix& u, Sign sign) {
  const bool ok = sign == Sign::lower ? u.is_lower_unitriangular() : u.is_upper_unitriangular();
  if (!ok)
    throw PreconditionError("matrix is not unitriangular of the stated sign");
  return is_in_U_pos(inverse(u), sign);
}

Rational chi(std::size_t i, const TorusElement& t) {
  check_generator(t.n(), i);
  return t[i - 1] / t[i];
}

bool is_in_T_p_pos(const TorusElement& t, const Rational& p) {
  if (p <= 0)
    throw PreconditionError("p must be positive");
  if (!t.is_positive())
    return false;
  for (std::size_t i = 1; i < t.n(); ++i)
    if (chi(i, t) <= p)
      return false;
  return true;
}

namespace {

// Lower case. Peels generators off the right: if u = u' y_i(a) with u' in
// the lower cell of w s_i, the flag minor on rows w{1..i}, columns {1..i}
// vanishes on u', and it is affine in a.
std::optional<std::vector<Rational>> factor_lower(Matrix u, const ReducedWord& word) {
  const std::size_t n = word.n;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (auto i : word.letters)
    std::swap(perm[i - 1], perm[i]);

  std::vector<Rational> params(word.letters.size());
  for (std::size_t k = word.letters.size(); k-- > 0;) {
    const std::size_t i = word.letters[k];
    MinorIndex top;
    top.rows.assign(perm.begin(), perm.begin() + static_cast<long>(i));
    std::sort(top.rows.begin(), top.rows.end());
    for (std::size_t j = 0; j < i; ++j)
      top.cols.push_back(j);
    MinorIndex shifted = top;
    shifted.cols.back() = i;
    Rational den = minor(u, shifted);
    if (den == 0)
      return std::nullopt;
    Rational a = minor(u, top) / den;
    if (a == 0)
      return std::nullopt;
    params[k] = a;
    for (std::size_t r = 0; r < n; ++r)
      u(r, i - 1) -= a * u(r, i);
    std::swap(perm[i - 1], perm[i]);
  }
  if (u != Matrix::identity(n))
    return std::nullopt;
  return params;
}

} // namespace

std::optional<std::vector<Rational>> factor_along_word(const Matrix& u, const ReducedWord& word,
                                                       Sign sign) {
  if (!u.is_square() || u.size() != word.n)
    throw PreconditionError("matrix size does not match the word");
  if (word_length(word) != static_cast<long>(word.letters.size()))
    throw PreconditionError("word is not reduced");
  if (sign == Sign::lower) {
    if (!u.is_lower_unitriangular())
      throw PreconditionError("matrix is not lower unitriangular");
    return factor_lower(u, word);
  }
  if (!u.is_upper_unitriangular())
    throw PreconditionError("matrix is not upper unitriangular");
  // (x_{i_1}(a_1) ... x_{i_k}(a_k))^T = y_{i_k}(a_k) ... y_{i_1}(a_1).
  auto params = factor_lower(u.transpose(), word.reversed());
  if (params)
    std::reverse(params->begin(), params->end());
  return params;
}

} // namespace tpos
