#include "tpos/pimap.hpp"

#include "tpos/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tpos {

namespace {

// Scale so the first nonzero coordinate is 1.
Vector normalized(Vector v) {
  for (const auto& x : v)
    if (x != 0) {
      Rational lead = x;
      for (auto& y : v)
        y /= lead;
      break;
    }
  return v;
}

EigenData exact_split(const Matrix& g, const std::vector<Rational>& roots) {
  const std::size_t n = g.size();
  EigenData out;
  out.exact = true;
  out.values = roots;
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (roots[i] <= 0)
      throw InvariantViolation("non-positive eigenvalue of a totally positive matrix");
    if (i > 0 && roots[i] == roots[i - 1])
      throw InvariantViolation("repeated eigenvalue of a totally positive matrix");
    Matrix shifted = g;
    for (std::size_t k = 0; k < n; ++k)
      shifted(k, k) -= roots[i];
    auto kernel = kernel_basis(shifted);
    if (kernel.size() != 1)
      throw InvariantViolation("eigenspace of a simple eigenvalue is not a line");
    cols.push_back(normalized(std::move(kernel.front())));
    out.approx_values.push_back(roots[i].get_d());
  }
  out.vectors = Matrix::from_columns(cols);
  return out;
}

EigenData floating_split(const Matrix& g, const FloatTolerance& tol) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = g(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get_d();

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("eigen solver did not converge");
  const auto& lambda = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index a, Eigen::Index b) { return lambda(a).real() > lambda(b).real(); });

  EigenData out;
  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(lambda(i)));
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Eigen::Index i = order[k];
    if (std::abs(lambda(i).imag()) > tol.separation * std::max(1.0, scale))
      throw NumericalFailure("non-real eigenvalue");
    const double value = lambda(i).real();
    if (value <= 0.0)
      throw NumericalFailure("non-positive eigenvalue");
    if (k > 0 && out.approx_values.back() - value <= tol.separation)
      throw NumericalFailure("eigenvalues not separated");

    Eigen::VectorXd v = vecs.col(i).real();
    Eigen::Index lead = 0;
    v.cwiseAbs().maxCoeff(&lead);
    v /= v(lead);
    const double resid = (m * v - value * v).cwiseAbs().maxCoeff() / v.cwiseAbs().maxCoeff();
    out.residual = std::max(out.residual, resid);

    Vector col(static_cast<std::size_t>(n));
    for (Eigen::Index r = 0; r < n; ++r)
      col[static_cast<std::size_t>(r)] = from_double(v(r));
    cols.push_back(normalized(std::move(col)));
    out.approx_values.push_back(value);
    out.values.push_back(from_double(value));
  }
  if (!(out.residual < tol.residual))
    throw NumericalFailure("eigen residual above tolerance");
  out.vectors = Matrix::from_columns(cols);
  return out;
}

bool lower_part_within(const Matrix& x, double tolerance) {
  double largest = 0.0, lower = 0.0;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const double a = std::abs(x(r, c).get_d());
      largest = std::max(largest, a);
      if (r > c)
        lower = std::max(lower, a);
    }
  return lower <= tolerance * largest;
}

bool stabilizes(const Matrix& g, const BorelPoint& b, double tolerance) {
  if (tolerance <= 0.0)
    return b.is_stabilized_by(g);
  return lower_part_within(inverse(b.basis()) * g * b.basis(), tolerance);
}

} // namespace

EigenData eigen_split(const Matrix& g, const FloatTolerance& tol) {
  if (!is_in_G_pos(g))
    throw PreconditionError("eigen_split: matrix is not totally positive");
  auto roots = rational_roots(char_poly(g));
  if (roots.size() == g.size())
    return exact_split(g, roots);
  return floating_split(g, tol);
}

FlagPairClass pi_prime(const Matrix& g, const FloatTolerance& tol) {
  EigenData data = eigen_split(g, tol);
  BorelPoint descending(data.vectors);
  BorelPoint ascending(reverse_columns(data.vectors));
  if (!is_in_B_pos(descending))
    throw InvariantViolation("descending eigenflag is not in B_{>0}");
  if (!is_in_B_neg(ascending))
    throw InvariantViolation("ascending eigenflag is not in B_{<0}");
  return FlagPairClass(std::move(descending), std::move(ascending));
}

TorusFrame pi(const Matrix& g, const FloatTolerance& tol) {
  return TorusFrame(eigen_split(g, tol).vectors);
}

bool verify_unique_borel(const Matrix& g, const BorelPoint& b, double tolerance) {
  return is_in_B_pos(b) && stabilizes(g, b, tolerance);
}

bool verify_unique_borel_neg(const Matrix& g_inverse, const BorelPoint& b, double tolerance) {
  return is_in_B_neg(b) && stabilizes(g_inverse, b, tolerance);
}

Matrix adjoint_action(const Matrix& g) {
  const std::size_t n = g.size();
  const Matrix g_inv = inverse(g);
  Matrix ad(n * n);
  // Column (i, j) is g E_ij g^{-1} = (column i of g)(row j of g^{-1}).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          ad(r * n + c, i * n + j) = g(r, i) * g_inv(j, c);
  return ad;
}

} // namespace tpos
