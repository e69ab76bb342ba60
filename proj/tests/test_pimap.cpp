#include "oracles.hpp"

#include "tpos/errors.hpp"
#include "tpos/pimap.hpp"
#include "tpos/sampling.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace tpos;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Matrix lower_sample(Sampler& rng, std::size_t n) {
  return unipotent_from_word(sample_lower_word(rng, n, q(1, 4), 4));
}

Matrix positive_sample(Sampler& rng, std::size_t n) {
  auto up = sample_lower_word(rng, n, q(1, 4), 4);
  up.sign = Sign::upper;
  std::vector<Rational> d(n);
  for (auto& x : d)
    x = rng.log_uniform(q(1, 4), 4);
  return g_pos_from_factors(up, TorusElement(d), sample_lower_word(rng, n, q(1, 4), 4));
}

Matrix reshape(const Vector& v, std::size_t n) {
  Matrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = v[r * n + c];
  return m;
}

} // namespace

TEST_CASE("exact eigen split of a constructed torus element") {
  Sampler rng(5);
  const TorusFrame f = frame_from_unipotents(lower_sample(rng, 3), lower_sample(rng, 3));
  const Matrix g = torus_element(f, TorusElement({4096, 64, 1}));
  REQUIRE(is_in_G_pos(g).verdict);
  const EigenData e = eigen_split(g);
  CHECK(e.exact);
  CHECK(e.values == std::vector<Rational>{4096, 64, 1});
  CHECK(same_torus(TorusFrame(e.vectors), f));
  for (std::size_t i = 0; i < 3; ++i) {
    Vector scaled = e.vectors.column(i);
    for (auto& x : scaled)
      x *= e.values[i];
    CHECK(g * e.vectors.column(i) == scaled);
  }
}

TEST_CASE("GL2 example eigenvectors") {
  const Matrix g{{q(3, 2), q(1, 2)}, {q(1, 2), q(3, 2)}};
  const EigenData e = eigen_split(g);
  CHECK(e.exact);
  CHECK(e.values == std::vector<Rational>{2, 1});
  CHECK(e.vectors.column(0) == Vector{1, 1});
  CHECK(e.vectors.column(1) == Vector{1, -1});
  const FlagPairClass pair = pi_prime(g);
  CHECK(pair.first().same_flag(BorelPoint(Matrix{{1, 0}, {1, 1}})));
  CHECK(pair.second().same_flag(BorelPoint(Matrix{{1, 0}, {-1, 1}})));
  CHECK(same_torus(pi(g), TorusFrame(Matrix{{1, 1}, {1, -1}})));
}

TEST_CASE("floating fallback on an irrational spectrum") {
  const Matrix g{{2, 1}, {1, 1}};
  const EigenData e = eigen_split(g);
  CHECK_FALSE(e.exact);
  CHECK(e.residual < 1e-12);
  REQUIRE(e.approx_values.size() == 2);
  CHECK(e.approx_values[0] == doctest::Approx((3 + std::sqrt(5.0)) / 2));
  CHECK(e.approx_values[1] == doctest::Approx((3 - std::sqrt(5.0)) / 2));
  const FlagPairClass pair = pi_prime(g);
  CHECK(verify_unique_borel(g, pair.first(), 1e-9));
  CHECK(verify_unique_borel_neg(inverse(g), pair.second(), 1e-9));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(eigen_split(Matrix::identity(3)), PreconditionError);
  CHECK_THROWS_AS(pi(Matrix::identity(2)), PreconditionError);
  CHECK_THROWS_AS(pi_prime(Matrix{{1, 2}, {3, 4}}), PreconditionError);
}

TEST_CASE("unique Borel checks") {
  Sampler rng(15);
  const TorusFrame f = frame_from_unipotents(lower_sample(rng, 3), lower_sample(rng, 3));
  const Matrix g = torus_element(f, TorusElement({10000, 100, 1}));
  REQUIRE(is_in_G_pos(g).verdict);
  const FlagPairClass pair = pi_prime(g);
  CHECK(verify_unique_borel(g, pair.first()));
  CHECK_FALSE(verify_unique_borel(g, BorelPoint::standard(3)));
  CHECK(verify_unique_borel_neg(inverse(g), pair.second()));
  CHECK_FALSE(verify_unique_borel_neg(inverse(g), pair.first()));
}

TEST_CASE("spectral positivity on factored samples") {
  Sampler rng(16);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int k = 0; k < 25; ++k) {
      const Matrix g = positive_sample(rng, n);
      const EigenData e = eigen_split(g);
      if (e.exact) {
        for (std::size_t i = 0; i + 1 < n; ++i)
          CHECK(e.values[i] > e.values[i + 1]);
        CHECK(e.values.back() > 0);
      } else {
        CHECK(e.residual < 1e-10);
        for (std::size_t i = 0; i + 1 < n; ++i)
          CHECK(e.approx_values[i] - e.approx_values[i + 1] > 1e-9);
        CHECK(e.approx_values.back() > 0);
      }
      const FlagPairClass pair = pi_prime(g);
      CHECK(is_in_B_pos(pair.first()));
      CHECK(is_in_B_neg(pair.second()));
      // The centraliser torus has provenance in the positive flag pairs.
      CHECK(same_torus(pi(g), frame_from_unipotents(pair.u(), pair.v())));
    }
}

TEST_CASE("pi round trip on the exact path") {
  Sampler rng(18);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int k = 0; k < 25; ++k) {
      const TorusFrame f = frame_from_unipotents(lower_sample(rng, n), lower_sample(rng, n));
      std::vector<Rational> d(n);
      d[n - 1] = 1;
      for (std::size_t i = n - 1; i-- > 0;)
        d[i] = d[i + 1] * rng.log_uniform(1024, 65536);
      const Matrix g = torus_element(f, TorusElement(d));
      if (!is_in_G_pos(g).verdict)
        continue;
      const EigenData e = eigen_split(g);
      CHECK(e.exact);
      CHECK(e.values == d);
      CHECK(same_torus(pi(g), f));
    }
}

TEST_CASE("eigenflags agree with the adjoint action") {
  Sampler rng(19);
  for (std::size_t n : {2, 3}) {
    for (int k = 0; k < 5; ++k) {
      const TorusFrame f = frame_from_unipotents(lower_sample(rng, n), lower_sample(rng, n));
      std::vector<Rational> d(n);
      d[n - 1] = 1;
      for (std::size_t i = n - 1; i-- > 0;)
        d[i] = d[i + 1] * rng.log_uniform(1024, 4096);
      const Matrix g = torus_element(f, TorusElement(d));
      if (!is_in_G_pos(g).verdict)
        continue;
      const FlagPairClass pair = pi_prime(g);
      const Matrix ad = adjoint_action(g);
      std::vector<Rational> ratios;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (std::find(ratios.begin(), ratios.end(), d[i] / d[j]) == ratios.end())
            ratios.push_back(d[i] / d[j]);
      std::size_t at_least_one = 0, at_most_one = 0;
      for (const auto& mu : ratios) {
        Matrix shifted = ad;
        for (std::size_t r = 0; r < n * n; ++r)
          shifted(r, r) -= mu;
        for (const auto& v : kernel_basis(shifted)) {
          const Matrix x = reshape(v, n);
          if (mu >= 1) {
            CHECK(pair.first().is_stabilized_by(x));
            ++at_least_one;
          }
          if (mu <= 1) {
            CHECK(pair.second().is_stabilized_by(x));
            ++at_most_one;
          }
        }
      }
      CHECK(at_least_one == n * (n + 1) / 2);
      CHECK(at_most_one == n * (n + 1) / 2);
    }
  }
}

TEST_CASE("adjoint action matches conjugation") {
  const Matrix g{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  const Matrix ad = adjoint_action(g);
  Matrix x{{1, q(2, 3), 0}, {-1, 0, 5}, {3, 1, q(1, 2)}};
  Vector flat(x.data().begin(), x.data().end());
  CHECK(reshape(ad * flat, 3) == oracle::product({g, x, inverse(g)}));
}
