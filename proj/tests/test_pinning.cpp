#include "oracles.hpp"

#include "tpos/errors.hpp"
#include "tpos/pinning.hpp"
#include "tpos/sampling.hpp"

#include <doctest.h>

using namespace tpos;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Matrix lower_sample(Sampler& rng, std::size_t n) {
  return unipotent_from_word(sample_lower_word(rng, n, q(1, 4), 4));
}

} // namespace

TEST_CASE("generators") {
  const Rational a = q(3, 7);
  CHECK(x_gen(2, 1, a) == Matrix{{1, a}, {0, 1}});
  CHECK(y_gen(2, 1, a) == Matrix{{1, 0}, {a, 1}});
  Matrix x32 = Matrix::identity(3);
  x32(1, 2) = a;
  CHECK(x_gen(3, 2, a) == x32);
  Matrix y31 = Matrix::identity(3);
  y31(1, 0) = a;
  CHECK(y_gen(3, 1, a) == y31);
  CHECK(x_gen(4, 3, 0) == Matrix::identity(4));
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t i = 1; i < n; ++i)
      CHECK(y_gen(n, i, a) == x_gen(n, i, a).transpose());
  CHECK_THROWS_AS(x_gen(3, 0, a), BoundsError);
  CHECK_THROWS_AS(y_gen(3, 3, a), BoundsError);
}

TEST_CASE("reduced words") {
  CHECK(positive_root_count(2) == 1);
  CHECK(positive_root_count(4) == 6);
  CHECK(validate_reduced_word({2, {1}}));
  CHECK(validate_reduced_word({3, {1, 2, 1}}));
  CHECK(validate_reduced_word({3, {2, 1, 2}}));
  CHECK_FALSE(validate_reduced_word({3, {1, 1, 2}}));
  CHECK_FALSE(validate_reduced_word({3, {1, 2}}));
  CHECK_FALSE(validate_reduced_word({3, {1, 3, 1}}));
  CHECK(validate_reduced_word(ReducedWord::standard(5)));
  // Known counts of reduced words of the longest element.
  CHECK(all_reduced_words(2).size() == 1);
  CHECK(all_reduced_words(3).size() == 2);
  CHECK(all_reduced_words(4).size() == 16);
  for (const auto& w : all_reduced_words(4))
    CHECK(validate_reduced_word(w));
}

TEST_CASE("unipotent from word matches direct products") {
  const Rational p = q(2), r = q(1, 3), s = q(5, 2);
  const Matrix lower = unipotent_from_word({{3, {1, 2, 1}}, {p, r, s}, Sign::lower});
  CHECK(lower == oracle::product({oracle::elementary(3, 1, 0, p), oracle::elementary(3, 2, 1, r),
                                  oracle::elementary(3, 1, 0, s)}));
  CHECK(lower(1, 0) == p + s);
  CHECK(lower(2, 0) == r * s);
  const Matrix upper = unipotent_from_word({{3, {2, 1, 2}}, {1, 1, 1}, Sign::upper});
  CHECK(upper == oracle::product({oracle::elementary(3, 1, 2, 1), oracle::elementary(3, 0, 1, 1),
                                  oracle::elementary(3, 1, 2, 1)}));
  CHECK(unipotent_from_word({{2, {1}}, {q(3, 4)}, Sign::lower}) == y_gen(2, 1, q(3, 4)));
  CHECK_THROWS_AS(unipotent_from_word({{3, {1, 1, 2}}, {1, 1, 1}, Sign::lower}), PreconditionError);
  CHECK_THROWS_AS(unipotent_from_word({{3, {1, 2, 1}}, {1, 1}, Sign::lower}), PreconditionError);
  CHECK_THROWS_AS(unipotent_from_word({{3, {1, 2, 1}}, {1, 0, 1}, Sign::lower}), PreconditionError);
}

TEST_CASE("G_pos from factors") {
  const Matrix g = g_pos_from_factors({{2, {1}}, {1}, Sign::upper}, TorusElement({2, 1}),
                                      {{2, {1}}, {1}, Sign::lower});
  CHECK(g == oracle::product({x_gen(2, 1, 1), Matrix{{2, 0}, {0, 1}}, y_gen(2, 1, 1)}));
  CHECK(g == Matrix{{3, 1}, {1, 1}});
  CHECK(is_in_G_pos(g).verdict);
  const Matrix h = g_pos_from_factors({{2, {1}}, {1}, Sign::upper}, TorusElement({1, 1}),
                                      {{2, {1}}, {1}, Sign::lower});
  CHECK(h == Matrix{{2, 1}, {1, 1}});
  CHECK(is_in_G_pos(h).verdict);
  const Matrix g3 = g_pos_from_factors({ReducedWord::standard(3), {1, 2, q(1, 2)}, Sign::upper},
                                       TorusElement({3, 1, q(1, 5)}),
                                       {{3, {2, 1, 2}}, {q(3, 2), 1, 4}, Sign::lower});
  CHECK(is_in_G_pos(g3).verdict);
  CHECK(oracle::all_minors_positive(g3));
  CHECK_THROWS_AS(g_pos_from_factors({{2, {1}}, {1}, Sign::upper}, TorusElement({-1, 1}),
                                     {{2, {1}}, {1}, Sign::lower}),
                  PreconditionError);
}

TEST_CASE("G_pos examples") {
  CHECK(is_in_G_pos(Matrix{{q(3, 2), q(1, 2)}, {q(1, 2), q(3, 2)}}).verdict);
  const auto id = is_in_G_pos(Matrix::identity(3));
  CHECK_FALSE(id.verdict);
  REQUIRE(id.witness);
  CHECK(id.witness->value == 0);
  // A totally positive GL_3 element with one consecutive 2x2 minor pushed
  // negative by a single entry change.
  Matrix g{{1, 1, 1}, {1, 2, 4}, {1, 3, 9}};
  REQUIRE(is_in_G_pos(g).verdict);
  g(2, 2) = 5;  // rows {2,3}, cols {2,3}: 2*5 - 4*3 < 0
  const auto bad = is_in_G_pos(g);
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.witness);
  CHECK(bad.witness->index == MinorIndex{{1, 2}, {1, 2}});
  CHECK(bad.witness->value == -2);
  CHECK_FALSE(is_in_G_pos_solid(g).verdict);
}

TEST_CASE("U_pos examples and criterion") {
  const Matrix u = oracle::product({y_gen(3, 1, 1), y_gen(3, 2, 1), y_gen(3, 1, 1)});
  CHECK(is_in_U_pos(u, Sign::lower).verdict);
  CHECK_FALSE(is_in_U_pos(y_gen(2, 1, -1), Sign::lower).verdict);
  CHECK_FALSE(is_in_U_pos(Matrix::identity(3), Sign::lower).verdict);
  CHECK_THROWS_AS(is_in_U_pos(u, Sign::upper), PreconditionError);
  // Nonzero entries but a vanishing nontrivial 2x2 minor.
  const Matrix degenerate{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  const auto r = is_in_U_pos(degenerate, Sign::lower);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(r.witness->index == MinorIndex{{1, 2}, {0, 1}});
}

TEST_CASE("U_pos criterion agrees with parameterization") {
  Sampler rng(99);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int k = 0; k < 20; ++k) {
      const Matrix u = lower_sample(rng, n);
      CAPTURE(n);
      CHECK(is_in_U_pos(u, Sign::lower).verdict);
      // Inverse-transpose symmetry and the inversion law.
      CHECK(is_in_U_pos(u.transpose(), Sign::upper).verdict);
      CHECK(is_in_U_neg(inverse(u), Sign::lower).verdict);
      CHECK_FALSE(is_in_U_pos(inverse(u), Sign::lower).verdict);
      // Sign-flipped parameters generate the inverse set.
      if (n == 3) {
        auto c = sample_lower_word(rng, 3, q(1, 4), 4);
        Matrix flipped = Matrix::identity(3);
        for (std::size_t j = c.params.size(); j-- > 0;)
          flipped = flipped * y_gen(3, c.word.letters[j], -c.params[j]);
        CHECK(flipped == inverse(unipotent_from_word(c)));
        CHECK(is_in_U_neg(flipped, Sign::lower).verdict);
      }
    }
}

TEST_CASE("reduced word independence for all words up to n = 4") {
  Sampler rng(31);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto words = all_reduced_words(n);
    for (const auto& from : words) {
      std::vector<Rational> params;
      for (std::size_t k = 0; k < from.letters.size(); ++k)
        params.push_back(rng.log_uniform(q(1, 8), 8));
      for (Sign sign : {Sign::lower, Sign::upper}) {
        const Matrix u = unipotent_from_word({from, params, sign});
        CHECK(is_in_U_pos(u, sign).verdict);
        CHECK(factor_along_word(u, from, sign) == params);
        for (const auto& to : words) {
          const auto back = factor_along_word(u, to, sign);
          REQUIRE(back);
          for (const auto& a : *back)
            CHECK(a > 0);
          CHECK(unipotent_from_word({to, *back, sign}) == u);
        }
      }
    }
  }
}

TEST_CASE("factor along word rejects non-members") {
  const auto word = ReducedWord::standard(3);
  CHECK_FALSE(factor_along_word(Matrix::identity(3), word, Sign::lower));
  CHECK_FALSE(factor_along_word(Matrix{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}, word, Sign::lower));
  CHECK_THROWS_AS(factor_along_word(Matrix::identity(3), {3, {1, 1, 2}}, Sign::lower),
                  PreconditionError);
  CHECK_THROWS_AS(factor_along_word(x_gen(3, 1, 1), word, Sign::lower), PreconditionError);
}

TEST_CASE("semigroup and solid minors") {
  Sampler rng(4);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int k = 0; k < 8; ++k) {
      auto up = sample_lower_word(rng, n, q(1, 4), 4);
      up.sign = Sign::upper;
      std::vector<Rational> d(n);
      for (auto& x : d)
        x = rng.log_uniform(q(1, 4), 4);
      const auto down = sample_lower_word(rng, n, q(1, 4), 4);
      const Matrix g = g_pos_from_factors(up, TorusElement(d), down);
      const Matrix h = g_pos_from_factors(up, TorusElement(d), down).transpose();
      CHECK(is_in_G_pos(g).verdict);
      CHECK(is_in_G_pos(h).verdict);
      CHECK(is_in_G_pos(g * h).verdict);
      CHECK(is_in_G_pos_solid(g).verdict);
      if (n <= 4)
        CHECK(oracle::all_minors_positive(g));
      // Perturbed matrices: the solid test must agree with the full scan.
      Matrix p = g;
      p(rng.integer(0, static_cast<long>(n) - 1), rng.integer(0, static_cast<long>(n) - 1)) *= q(1, 50);
      CHECK(is_in_G_pos(p).verdict == is_in_G_pos_solid(p).verdict);
    }
}

TEST_CASE("characters and cones") {
  CHECK(chi(1, TorusElement({2, 1})) == 2);
  CHECK(chi(2, TorusElement({4, 2, 1})) == 2);
  CHECK(chi(3, TorusElement({q(5, 2), q(5, 2), q(5, 2), q(5, 2)})) == 1);
  CHECK(is_in_T_p_pos(TorusElement({4, 2, 1}), 1));
  CHECK_FALSE(is_in_T_p_pos(TorusElement({4, 2, 1}), 2));
  CHECK_FALSE(is_in_T_p_pos(TorusElement({1, 2}), 1));
  CHECK_FALSE(is_in_T_p_pos(TorusElement({1, 2}), 3));
  CHECK_FALSE(is_in_T_p_pos(TorusElement({-4, -2, -1}), 1));
  CHECK_THROWS_AS(is_in_T_p_pos(TorusElement({4, 2, 1}), 0), PreconditionError);
  CHECK_THROWS_AS(chi(3, TorusElement({4, 2, 1})), BoundsError);
  CHECK_THROWS_AS(TorusElement({1, 0}), PreconditionError);
}
