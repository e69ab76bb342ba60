#include "tpos/linalg.hpp"

#include "tpos/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <utility>

namespace tpos {

std::string MinorIndex::to_string() const {
  std::ostringstream os;
  auto put = [&os](const std::vector<std::size_t>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? "," : "") << v[i] + 1;
    os << '}';
  };
  os << "rows";
  put(rows);
  os << " cols";
  put(cols);
  return os.str();
}

void check_minor_index(const MinorIndex& idx, std::size_t n) {
  if (idx.rows.empty() || idx.rows.size() != idx.cols.size())
    throw BoundsError("minor index: row and column lists must be nonempty and of equal length");
  for (const auto* list : {&idx.rows, &idx.cols})
    for (std::size_t i = 0; i < list->size(); ++i) {
      if ((*list)[i] >= n)
        throw BoundsError("minor index out of range: " + idx.to_string());
      if (i > 0 && (*list)[i] <= (*list)[i - 1])
        throw BoundsError("minor index not strictly increasing: " + idx.to_string());
    }
}

namespace {

Matrix submatrix(const Matrix& g, const MinorIndex& idx) {
  Matrix m(idx.order());
  for (std::size_t r = 0; r < idx.order(); ++r)
    for (std::size_t c = 0; c < idx.order(); ++c)
      m(r, c) = g(idx.rows[r], idx.cols[c]);
  return m;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(p, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0)
        continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

Rational minor(const Matrix& g, const MinorIndex& idx) {
  if (!g.is_square())
    throw InputError("minor of a non-square matrix");
  check_minor_index(idx, g.size());
  return determinant(submatrix(g, idx));
}

Rational determinant(const Matrix& g) {
  if (!g.is_square())
    throw InputError("determinant of a non-square matrix");
  const std::size_t n = g.size();
  if (n == 0)
    return 1;

  // Scale every row to integers, run integer Bareiss, undo the scaling.
  std::vector<Integer> a(n * n);
  Rational scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < n; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g(r, c).get_den_mpz_t());
    scale *= lcm;
    for (std::size_t c = 0; c < n; ++c)
      a[r * n + c] = g(r, c).get_num() * (lcm / g(r, c).get_den());
  }

  int sign = 1;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a[p * n + c], a[k * n + c]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  Rational det(a[n * n - 1] * sign);
  return det / scale;
}

Matrix inverse(const Matrix& g) {
  if (!g.is_square())
    throw InputError("inverse of a non-square matrix");
  const std::size_t n = g.size();
  Matrix aug = g.hcat(Matrix::identity(n));
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw SingularMatrixError("matrix is singular");
  return aug.column_block(n, n);
}

Vector solve(const Matrix& g, const Vector& b) {
  if (!g.is_square() || b.size() != g.size())
    throw InputError("solve: shape mismatch");
  const std::size_t n = g.size();
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = g(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw SingularMatrixError("solve: matrix is singular");
  return aug.column(n);
}

std::size_t rank(const Matrix& g) {
  Matrix m = g;
  return rref(m).size();
}

std::vector<Vector> kernel_basis(const Matrix& g) {
  Matrix m = g;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Polynomials, coefficients low to high.

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  trim(num);
  if (den.empty())
    throw InvariantViolation("polynomial division by zero");
  if (degree(num) < degree(den))
    return {{}, num};
  Poly q(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (int k = degree(num) - degree(den); k >= 0; --k) {
    Rational f = num[k + den.size() - 1] / lead;
    q[k] = f;
    if (f == 0)
      continue;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[k + j] -= f * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(q);
  return {q, num};
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty())
    return p;
  Rational lead = p.back();
  for (auto& c : p)
    c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Sign changes of the Sturm chain at x, zeros skipped.
int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(evaluate(p, x));
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty())
      break;
    for (auto& c : r)
      c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

// Least common multiple of denominators times the leading numerator bound:
// every rational root of p has denominator dividing this integer.
Integer denominator_bound(const Poly& p) {
  Integer lcm = 1;
  for (const auto& c : p)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer lead = p.back().get_num() * (lcm / p.back().get_den());
  return abs(lead);
}

Rational floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// Rational with the smallest denominator in [lo, hi], lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0)
    return 0;
  if (hi < 0)
    return -simplest_between(-hi, -lo);
  Rational f = floor_of(lo);
  if (f == lo)
    return lo;
  if (f + 1 <= hi)
    return f + 1;
  Rational rest = simplest_between(1 / (hi - f), 1 / (lo - f));
  return f + 1 / rest;
}

// One rational root of the squarefree polynomial p, or none.
std::optional<Rational> find_rational_root(const Poly& p) {
  if (degree(p) == 1)
    return -p[0] / p[1];
  auto chain = sturm_chain(p);

  // Cauchy bound.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational r = abs(p[i] / p.back());
    if (r > bound)
      bound = r;
  }
  bound += 1;

  Integer den_bound = denominator_bound(p);
  Rational target_width(Integer(1), den_bound * den_bound * 2);

  struct Interval {
    Rational lo, hi;
    int v_lo, v_hi;
  };
  std::vector<Interval> work{{-bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound)}};
  while (!work.empty()) {
    Interval iv = std::move(work.back());
    work.pop_back();
    int count = iv.v_lo - iv.v_hi;
    if (count <= 0)
      continue;
    if (evaluate(p, iv.hi) == 0)
      return iv.hi;
    if (count == 1 && iv.hi - iv.lo < target_width) {
      Rational cand = simplest_between(iv.lo, iv.hi);
      if (evaluate(p, cand) == 0)
        return cand;
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    if (evaluate(p, mid) == 0)
      return mid;
    int v_mid = sign_changes(chain, mid);
    work.push_back({iv.lo, mid, iv.v_lo, v_mid});
    work.push_back({mid, iv.hi, v_mid, iv.v_hi});
  }
  return std::nullopt;
}

} // namespace

std::vector<Rational> char_poly(const Matrix& g) {
  if (!g.is_square())
    throw InputError("char_poly of a non-square matrix");
  const std::size_t n = g.size();
  Matrix h = g;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0)
      ++i;
    if (i == n)
      continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j)
        std::swap(h(j, i), h(j, m));
    }
    for (i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0)
        continue;
      Rational u = h(i, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j)
        h(i, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j)
        h(j, m) += u * h(j, i);
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next(k + 1);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Rational sub = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      sub *= h(i, i - 1);
      if (sub == 0)
        break;
      Rational f = h(i - 1, k - 1) * sub;
      for (std::size_t d = 0; d < p[i - 1].size(); ++d)
        next[d] -= f * p[i - 1][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

Rational evaluate(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Matrix evaluate(const std::vector<Rational>& poly, const Matrix& x) {
  const std::size_t n = x.size();
  Matrix acc(n);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = acc * x;
    for (std::size_t i = 0; i < n; ++i)
      acc(i, i) += *it;
  }
  return acc;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
  Poly p = poly;
  trim(p);
  std::vector<Rational> roots;
  if (degree(p) < 1)
    return roots;

  Poly squarefree = divmod(p, gcd(p, derivative(p))).first;
  squarefree = monic(squarefree);
  std::vector<Rational> distinct;
  while (degree(squarefree) >= 1) {
    auto r = find_rational_root(squarefree);
    if (!r)
      break;
    distinct.push_back(*r);
    squarefree = divmod(squarefree, Poly{-*r, 1}).first;
  }

  for (const auto& r : distinct) {
    Poly rest = p;
    for (;;) {
      auto [q, rem] = divmod(rest, Poly{-r, 1});
      if (!rem.empty())
        break;
      roots.push_back(r);
      rest = std::move(q);
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

// ---------------------------------------------------------------------------

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::uint32_t mask,
                  std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i)
    combinations(n, k - 1, i + 1, mask | (1u << i), out);
}

} // namespace

MinorTable::MinorTable(const Matrix& g) : n_(g.size()) {
  if (!g.is_square())
    throw InputError("minor table of a non-square matrix");
  if (n_ > 16)
    throw InputError("minor table supports n <= 16");
  subsets_.resize(n_ + 1);
  position_.assign(n_ + 1, std::vector<std::size_t>(std::size_t{1} << n_, 0));
  values_.resize(n_ + 1);
  for (std::size_t k = 0; k <= n_; ++k) {
    combinations(n_, k, 0, 0, subsets_[k]);
    for (std::size_t i = 0; i < subsets_[k].size(); ++i)
      position_[k][subsets_[k][i]] = i;
  }
  values_[0] = {Rational(1)};

  for (std::size_t k = 1; k <= n_; ++k) {
    const auto& subs = subsets_[k];
    const std::size_t m = subs.size();
    const std::size_t m_prev = subsets_[k - 1].size();
    auto& out = values_[k];
    out.assign(m * m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint32_t rows = subs[i];
      const unsigned first_row = static_cast<unsigned>(std::countr_zero(rows));
      const std::size_t rest_pos = position_[k - 1][rows & ~(1u << first_row)];
      for (std::size_t j = 0; j < m; ++j) {
        const std::uint32_t cols = subs[j];
        Rational& acc = out[i * m + j];
        int parity = 0;
        for (std::uint32_t cm = cols; cm != 0; cm &= cm - 1) {
          const unsigned c = static_cast<unsigned>(std::countr_zero(cm));
          const Rational& entry = g(first_row, c);
          if (entry != 0) {
            const Rational& sub =
                values_[k - 1][rest_pos * m_prev + position_[k - 1][cols & ~(1u << c)]];
            if (parity)
              acc -= entry * sub;
            else
              acc += entry * sub;
          }
          parity ^= 1;
        }
      }
    }
  }
}

const Rational& MinorTable::get(std::uint32_t row_mask, std::uint32_t col_mask) const {
  const auto k = static_cast<std::size_t>(std::popcount(row_mask));
  if (k == 0 || k > n_ || std::popcount(col_mask) != static_cast<int>(k) ||
      (row_mask >> n_) != 0 || (col_mask >> n_) != 0)
    throw BoundsError("minor table: bad masks");
  const std::size_t m = subsets_[k].size();
  return values_[k][position_[k][row_mask] * m + position_[k][col_mask]];
}

Rational MinorTable::get(const MinorIndex& idx) const {
  check_minor_index(idx, n_);
  std::uint32_t rm = 0, cm = 0;
  for (auto r : idx.rows)
    rm |= 1u << r;
  for (auto c : idx.cols)
    cm |= 1u << c;
  return get(rm, cm);
}

MinorIndex minor_index_from_masks(std::uint32_t row_mask, std::uint32_t col_mask) {
  MinorIndex idx;
  for (std::size_t i = 0; i < 32; ++i) {
    if (row_mask & (1u << i))
      idx.rows.push_back(i);
    if (col_mask & (1u << i))
      idx.cols.push_back(i);
  }
  return idx;
}

} // namespace tpos
