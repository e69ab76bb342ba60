#pragma once

#include "tpos/pinning.hpp"

#include <cstdint>
#include <random>

namespace tpos {

/// SplitMix64 finaliser; derives independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random source. Only raw std::mt19937_64 output is used
/// (its sequence is fixed by the standard); all conversions are done here so
/// that identical seeds give identical rationals everywhere.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Stream `index` of a root seed.
  static Sampler stream(std::uint64_t seed, std::uint64_t index);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Log-uniform in [lo, hi], rounded to an 11-bit-mantissa dyadic rational
  /// and clamped into [lo, hi].
  Rational log_uniform(const Rational& lo, const Rational& hi);

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

/// A point of U^-_{>0} along the standard reduced word, with parameters
/// log-uniform in [lo, hi].
ChevalleyWord sample_lower_word(Sampler& rng, std::size_t n, const Rational& lo, const Rational& hi);

/// Strictly descending positive diagonal with t_n = 1 and consecutive
/// ratios log-uniform in [lo, hi] (lo > 1).
TorusElement sample_descending_diagonal(Sampler& rng, std::size_t n, const Rational& lo,
                                        const Rational& hi);

} // namespace tpos
