#include "tpos/sampling.hpp"

#include "tpos/errors.hpp"

#include <cmath>

namespace tpos {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Sampler Sampler::stream(std::uint64_t seed, std::uint64_t index) {
  return Sampler(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

double Sampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo)
    throw PreconditionError("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0)
    return static_cast<std::int64_t>(engine_());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do
    x = engine_();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Sampler::log_uniform(const Rational& lo, const Rational& hi) {
  if (lo <= 0 || hi < lo)
    throw PreconditionError("log_uniform needs 0 < lo <= hi");
  if (lo == hi)
    return lo;
  const double l = std::log(lo.get_d());
  const double h = std::log(hi.get_d());
  const double x = std::exp(l + (h - l) * uniform());
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // 11 significant bits: x ~ m * 2^(exponent - 11).
  const auto m = static_cast<long>(std::lround(std::ldexp(mantissa, 11)));
  Rational q(m);
  if (exponent >= 11)
    q *= Rational(Integer(1) << static_cast<unsigned>(exponent - 11));
  else
    q /= Rational(Integer(1) << static_cast<unsigned>(11 - exponent));
  if (q < lo)
    return lo;
  if (q > hi)
    return hi;
  return q;
}

ChevalleyWord sample_lower_word(Sampler& rng, std::size_t n, const Rational& lo, const Rational& hi) {
  ChevalleyWord c{ReducedWord::standard(n), {}, Sign::lower};
  for (std::size_t k = 0; k < c.word.letters.size(); ++k)
    c.params.push_back(rng.log_uniform(lo, hi));
  return c;
}

TorusElement sample_descending_diagonal(Sampler& rng, std::size_t n, const Rational& lo,
                                        const Rational& hi) {
  if (lo <= 1)
    throw PreconditionError("descending diagonal needs ratio range above 1");
  std::vector<Rational> d(n);
  d[n - 1] = 1;
  for (std::size_t i = n - 1; i-- > 0;)
    d[i] = d[i + 1] * rng.log_uniform(lo, hi);
  return TorusElement(std::move(d));
}

} // namespace tpos
