#include "tpos/explorer.hpp"

#include "tpos/errors.hpp"
#include "tpos/gl_small.hpp"
#include "tpos/pimap.hpp"

#include <functional>
#include <sstream>

namespace tpos {

namespace {

// Stream indices; disjoint ranges keep frame, diagonal and suite draws apart.
constexpr std::uint64_t kFrameStream = 0;
constexpr std::uint64_t kDiagonalStream = 1ULL << 40;
constexpr std::uint64_t kOffsetStream = 2ULL << 40;
constexpr std::uint64_t kSuiteStream = 3ULL << 40;

// Largest witness exponent tried: M = 2, 4, ..., 2^kMaxWitnessBits.
constexpr unsigned kMaxWitnessBits = 64;

std::vector<Rational> descending_powers(std::size_t n, const Rational& m) {
  std::vector<Rational> d(n);
  d[n - 1] = 1;
  for (std::size_t i = n - 1; i-- > 0;)
    d[i] = d[i + 1] * m;
  return d;
}

bool is_member(const TorusFrame& f, const std::vector<Rational>& d) {
  return is_in_G_pos(torus_element(f, TorusElement(d))).verdict;
}

std::optional<Rational> find_witness_m(const TorusFrame& f) {
  Rational m = 2;
  for (unsigned k = 1; k <= kMaxWitnessBits; ++k, m *= 2)
    if (is_member(f, descending_powers(f.n(), m)))
      return m;
  return std::nullopt;
}

std::string status_for(std::size_t n) { return n <= 3 ? "theorem" : "evidence only"; }

} // namespace

void ScanConfig::validate() const {
  if (n < 2)
    throw PreconditionError("n must be at least 2");
  if (n > 16)
    throw PreconditionError("n above 16 is not supported");
  if (samples < 1)
    throw PreconditionError("samples must be at least 1");
  if (per_frame < 1)
    throw PreconditionError("per-frame count must be at least 1");
  if (grid_lo <= 0 || grid_hi < grid_lo)
    throw PreconditionError("grid bounds must satisfy 0 < LO <= HI");
  if (param_lo <= 0 || param_hi < param_lo)
    throw PreconditionError("parameter bounds must satisfy 0 < LO <= HI");
  if (p_tol <= 0)
    throw PreconditionError("p tolerance must be positive");
}

FrameSample sample_frame(const ScanConfig& cfg, std::size_t index) {
  Sampler rng = Sampler::stream(cfg.seed, kFrameStream + index);
  FrameSample f;
  f.index = index;
  f.u_params = sample_lower_word(rng, cfg.n, cfg.param_lo, cfg.param_hi).params;
  f.v_params = sample_lower_word(rng, cfg.n, cfg.param_lo, cfg.param_hi).params;
  return f;
}

TorusFrame build_frame(std::size_t n, const FrameSample& f) {
  const auto word = ReducedWord::standard(n);
  const Matrix u = unipotent_from_word({word, f.u_params, Sign::lower});
  const Matrix v = unipotent_from_word({word, f.v_params, Sign::lower});
  return frame_from_unipotents(u, v);
}

bool replay_counterexample(const Counterexample& c) {
  const TorusFrame frame = build_frame(c.n, c.frame);
  const TorusElement d(c.diag);
  return is_in_G_pos(torus_element(frame, d)).verdict && !is_in_T_p_pos(d, 1);
}

ConjectureReport scan_conjecture_a(const ScanConfig& cfg) {
  cfg.validate();
  ConjectureReport report;
  report.config = cfg;
  report.part = 'a';
  report.status = status_for(cfg.n);

  std::size_t remaining = cfg.samples;
  for (std::size_t fi = 0; fi < cfg.frames(); ++fi) {
    FrameScanA scan;
    scan.frame = sample_frame(cfg, fi);
    const TorusFrame frame = build_frame(cfg.n, scan.frame);
    Sampler rng = Sampler::stream(cfg.seed, kDiagonalStream + fi);
    const std::size_t count = std::min(cfg.per_frame, remaining);
    remaining -= count;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Rational> d(cfg.n);
      d[cfg.n - 1] = 1;
      for (std::size_t i = 0; i + 1 < cfg.n; ++i)
        d[i] = rng.log_uniform(cfg.grid_lo, cfg.grid_hi);
      ++scan.samples;
      const TorusElement t(d);
      const Matrix g = torus_element(frame, t);
      // The determinant is re-checked as part of the full minor scan.
      if (!is_in_G_pos(g).verdict)
        continue;
      ++scan.members;
      if (!is_in_T_p_pos(t, 1))
        report.counterexamples.push_back({cfg.seed, cfg.n, scan.frame, k, d});
    }
    scan.witness_m = find_witness_m(frame);
    report.total_samples += scan.samples;
    report.total_members += scan.members;
    if (!scan.nonempty())
      ++report.inconclusive_frames;
    report.frames_a.push_back(std::move(scan));
  }
  return report;
}

PBracket search_minimal_p(const ScanConfig& cfg, const TorusFrame& frame, std::uint64_t stream) {
  cfg.validate();
  if (frame.n() != cfg.n)
    throw PreconditionError("frame size differs from the configured n");
  const std::size_t n = cfg.n;
  const std::size_t m = n - 1;

  // Relative offsets rho with chi_i = p (1 + rho_i).
  const Rational tiny = Rational(1) / Rational(Integer(1) << 64);
  std::vector<std::vector<Rational>> offsets;
  offsets.push_back(std::vector<Rational>(m, tiny));
  Sampler rng = Sampler::stream(cfg.seed, kOffsetStream + stream);
  const Rational rho_lo = tiny;
  const Rational rho_hi = 1024;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> edge(m);
    for (std::size_t j = 0; j < m; ++j)
      edge[j] = j == i ? tiny : rng.log_uniform(rho_lo, rho_hi);
    offsets.push_back(std::move(edge));
  }
  for (std::size_t k = 0; k < cfg.per_frame; ++k) {
    std::vector<Rational> rho(m);
    for (auto& r : rho)
      r = rng.log_uniform(rho_lo, rho_hi);
    offsets.push_back(std::move(rho));
  }

  auto diagonal_at = [&](const Rational& p, const std::vector<Rational>& rho) {
    std::vector<Rational> d(n);
    d[n - 1] = 1;
    for (std::size_t i = m; i-- > 0;)
      d[i] = d[i + 1] * p * (1 + rho[i]);
    return d;
  };
  // First diagonal in T^p_{>0} whose torus element is not totally positive.
  auto failure_at = [&](const Rational& p) -> std::optional<std::vector<Rational>> {
    for (const auto& rho : offsets) {
      auto d = diagonal_at(p, rho);
      if (!is_member(frame, d))
        return d;
    }
    return std::nullopt;
  };

  PBracket b;
  Rational lo = cfg.grid_lo;
  Rational hi = cfg.grid_hi;
  if (lo == hi) {
    b.lower = lo;
    b.upper = hi;
    b.warnings.push_back("degenerate search range: bracket is the full range");
    return b;
  }
  auto fail_hi = failure_at(hi);
  if (fail_hi) {
    b.lower = hi;
    b.failing_witness = std::move(fail_hi);
    b.warnings.push_back("failures persist at the top of the search range");
    return b;
  }
  b.upper = hi;
  b.passing_witness = diagonal_at(hi, offsets.front());
  auto fail_lo = failure_at(lo);
  if (!fail_lo) {
    b.upper = lo;
    b.passing_witness = diagonal_at(lo, offsets.front());
    b.warnings.push_back("no failure at the bottom of the search range");
    return b;
  }
  b.lower = lo;
  b.failing_witness = std::move(fail_lo);
  while (*b.upper - *b.lower > cfg.p_tol) {
    Rational mid = (*b.lower + *b.upper) / 2;
    if (auto f = failure_at(mid)) {
      b.lower = mid;
      b.failing_witness = std::move(f);
    } else {
      b.upper = mid;
      b.passing_witness = diagonal_at(mid, offsets.front());
    }
  }
  return b;
}

ConjectureReport scan_conjecture_b(const ScanConfig& cfg) {
  cfg.validate();
  ConjectureReport report;
  report.config = cfg;
  report.part = 'b';
  report.status = status_for(cfg.n);
  for (std::size_t fi = 0; fi < cfg.frames(); ++fi) {
    FrameScanB scan;
    scan.frame = sample_frame(cfg, fi);
    scan.bracket = search_minimal_p(cfg, build_frame(cfg.n, scan.frame), fi);
    report.total_samples += cfg.per_frame + cfg.n;
    report.frames_b.push_back(std::move(scan));
  }
  return report;
}

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.informational && c.failures > 0)
      return false;
  return true;
}

namespace {

class SuiteRunner {
public:
  SuiteRunner(const ScanConfig& cfg, const SuiteHooks& hooks) : cfg_(cfg), hooks_(hooks) {}

  // Runs `body` once per sample; false or an exception counts as a failure.
  void check(const std::string& module, const std::string& name,
             const std::function<bool(Sampler&, std::size_t)>& body, bool informational = false) {
    CheckResult r{module, name, 0, 0, {}, informational};
    Sampler rng = Sampler::stream(cfg_.seed, kSuiteStream + checks_.size());
    for (std::size_t k = 0; k < cfg_.samples; ++k) {
      bool ok = false;
      std::string why = "property violated";
      try {
        ok = body(rng, k);
      } catch (const std::exception& e) {
        why = e.what();
      }
      ++r.checked;
      if (!ok && r.failures++ == 0)
        r.first_failure = "sample " + std::to_string(k) + ": " + why;
    }
    checks_.push_back(std::move(r));
  }

  Matrix lower(Sampler& rng, std::size_t n) const {
    return unipotent_from_word(sample_lower_word(rng, n, cfg_.param_lo, cfg_.param_hi));
  }

  Matrix integer_matrix(Sampler& rng, std::size_t n) const {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = Rational(static_cast<long>(rng.integer(-5, 5)));
    return m;
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

  const ScanConfig& cfg_;
  const SuiteHooks& hooks_;

private:
  std::vector<CheckResult> checks_;
};

void linalg_checks(SuiteRunner& s, std::size_t n) {
  s.check("exact_linalg", "inverse_roundtrip", [&](Sampler& rng, std::size_t) {
    const Matrix g = s.integer_matrix(rng, n);
    if (determinant(g) == 0)
      return rank(g) < n;
    const Matrix gi = inverse(g);
    return g * gi == Matrix::identity(n) && inverse(gi) == g;
  });
  s.check("exact_linalg", "determinant_multiplicative", [&](Sampler& rng, std::size_t) {
    const Matrix a = s.integer_matrix(rng, n);
    const Matrix b = s.integer_matrix(rng, n);
    return determinant(a * b) == determinant(a) * determinant(b);
  });
  s.check("exact_linalg", "cayley_hamilton", [&](Sampler& rng, std::size_t) {
    const Matrix g = s.integer_matrix(rng, n);
    return evaluate(char_poly(g), g).is_zero();
  });
  s.check("exact_linalg", "kernel_annihilated", [&](Sampler& rng, std::size_t) {
    Matrix g = s.integer_matrix(rng, n);
    for (std::size_t j = 0; j < n; ++j)
      g(n - 1, j) = g(0, j) - g(n - 2, j);
    const auto kernel = kernel_basis(g);
    if (kernel.size() + rank(g) != n)
      return false;
    for (const auto& v : kernel)
      for (const auto& x : g * v)
        if (x != 0)
          return false;
    return !kernel.empty();
  });
}

void pinning_checks(SuiteRunner& s, std::size_t n) {
  s.check("pinning", "semigroup", [&](Sampler& rng, std::size_t) {
    return is_in_U_pos(s.lower(rng, n) * s.lower(rng, n), Sign::lower).verdict;
  });
  s.check("pinning", "transpose_symmetry", [&](Sampler& rng, std::size_t) {
    return is_in_U_pos(s.lower(rng, n).transpose(), Sign::upper).verdict;
  });
  const auto words = all_reduced_words(n);
  s.check("pinning", "reduced_word_independence", [&](Sampler& rng, std::size_t k) {
    const Matrix u = s.lower(rng, n);
    const auto& word = words[k % words.size()];
    const auto params = factor_along_word(u, word, Sign::lower);
    if (!params)
      return false;
    for (const auto& a : *params)
      if (a <= 0)
        return false;
    return unipotent_from_word({word, *params, Sign::lower}) == u;
  });
  s.check("pinning", "factored_product_positive", [&](Sampler& rng, std::size_t) {
    ChevalleyWord up = sample_lower_word(rng, n, s.cfg_.param_lo, s.cfg_.param_hi);
    up.sign = Sign::upper;
    std::vector<Rational> d(n);
    for (auto& x : d)
      x = rng.log_uniform(s.cfg_.param_lo, s.cfg_.param_hi);
    const ChevalleyWord down = sample_lower_word(rng, n, s.cfg_.param_lo, s.cfg_.param_hi);
    const Matrix g = g_pos_from_factors(up, TorusElement(d), down);
    return is_in_G_pos(g).verdict && is_in_G_pos_solid(g).verdict;
  });
}

void flag_checks(SuiteRunner& s, std::size_t n) {
  s.check("flags", "tilde_relation", [&](Sampler& rng, std::size_t) {
    const Matrix u = inverse(s.lower(rng, n));
    const Matrix ut = s.hooks_.tilde(u);
    return ut.is_upper_unitriangular() && tilde_relation_holds(u, ut);
  });
  s.check("flags", "opposed_pairs", [&](Sampler& rng, std::size_t) {
    const Matrix u = s.lower(rng, n);
    const Matrix v = s.lower(rng, n);
    const BorelPoint b = borel_from_lower(u);
    const BorelPoint bp = borel_from_lower(inverse(v));
    return is_in_B_pos(b) && is_in_B_neg(bp) && are_opposed(b, bp);
  });
}

void tori_checks(SuiteRunner& s, std::size_t n) {
  s.check("tori", "conjugation_certificate", [&](Sampler& rng, std::size_t) {
    const Matrix u = s.lower(rng, n);
    const Matrix v = s.lower(rng, n);
    const TorusFrame f = frame_from_unipotents(u, v, s.hooks_.tilde);
    return conjugation_certificate(f, borel_from_lower(u), borel_from_lower(inverse(v)));
  });
  s.check("tori", "injectivity", [&](Sampler& rng, std::size_t) {
    const Matrix u1 = s.lower(rng, n), v1 = s.lower(rng, n);
    const Matrix u2 = s.lower(rng, n), v2 = s.lower(rng, n);
    const TorusFrame f1 = frame_from_unipotents(u1, v1, s.hooks_.tilde);
    const TorusFrame f2 = frame_from_unipotents(u2, v2, s.hooks_.tilde);
    const bool identical = u1 == u2 && v1 == v2;
    return same_torus(f1, f1) && same_torus(f1, f2) == identical;
  });
  s.check("tori", "coordinates_roundtrip", [&](Sampler& rng, std::size_t) {
    const TorusFrame f = frame_from_unipotents(s.lower(rng, n), s.lower(rng, n), s.hooks_.tilde);
    std::vector<Rational> d(n);
    for (auto& x : d)
      x = rng.log_uniform(s.cfg_.grid_lo, s.cfg_.grid_hi);
    return torus_coordinates(f, torus_element(f, TorusElement(d))).diag() == d;
  });
}

void pimap_checks(SuiteRunner& s, std::size_t n) {
  s.check("pimap", "pi_roundtrip", [&](Sampler& rng, std::size_t) {
    const Matrix u = s.lower(rng, n), v = s.lower(rng, n);
    const TorusFrame f = frame_from_unipotents(u, v);
    auto m = find_witness_m(f);
    if (!m)
      return true;  // no member found within the witness range
    // Perturb the witness inside the cone to avoid a fixed spectrum shape.
    std::vector<Rational> d = descending_powers(n, *m * 2);
    for (std::size_t i = 0; i + 1 < n; ++i)
      d[i] *= rng.log_uniform(1, 2);
    const Matrix g = torus_element(f, TorusElement(d));
    if (!is_in_G_pos(g).verdict)
      return true;
    const FlagPairClass pair = pi_prime(g);
    return same_torus(pi(g), f) && verify_unique_borel(g, pair.first()) &&
           verify_unique_borel_neg(inverse(g), pair.second());
  });
}

gl_small::GL3Params gl3_params(SuiteRunner& s, Sampler& rng) {
  const Matrix u = s.lower(rng, 3);
  const Matrix v = s.lower(rng, 3);
  return {u(1, 0), u(2, 0), u(2, 1), v(1, 0), v(2, 0), v(2, 1)};
}

gl_small::Triple descending_triple(Sampler& rng) {
  const auto d = sample_descending_diagonal(rng, 3, make_rational(1025, 1024), 1024).diag();
  return {d[0], d[1], d[2]};
}

void gl_small_checks(SuiteRunner& s) {
  using namespace gl_small;
  s.check("gl_small_oracles", "gl2_closed_form", [&](Sampler& rng, std::size_t) {
    const GL2Params p{rng.log_uniform(s.cfg_.param_lo, s.cfg_.param_hi),
                      rng.log_uniform(s.cfg_.param_lo, s.cfg_.param_hi)};
    const Rational t = rng.log_uniform(make_rational(1, 64), 64);
    const Rational u = rng.log_uniform(make_rational(1, 64), 64);
    const Matrix g = gl2_torus_matrix(p, t, u);
    return g == torus_element(gl2_frame(p), TorusElement({t, u})) &&
           gl2_membership(p, t, u) == is_in_G_pos(g).verdict;
  });
  s.check("gl_small_oracles", "gl3_closed_form", [&](Sampler& rng, std::size_t) {
    const GL3Params p = gl3_params(s, rng);
    const Triple x = descending_triple(rng);
    const Matrix delta = Matrix::diagonal(std::vector<Rational>(x.begin(), x.end()));
    const Matrix g = gl3_g_entries(p, x[0], x[1], x[2]);
    const TorusFrame f = frame_from_unipotents(p.u(), p.v(), s.hooks_.tilde);
    return g == gl3_S(p) * delta * gl3_S_inverse(p) &&
           g == torus_element(f, TorusElement({x[0], x[1], x[2]}));
  });
  s.check("gl_small_oracles", "gl3_equivalence_from_inverse", [&](Sampler& rng, std::size_t) {
    const GL3Params p = gl3_params(s, rng);
    const Triple x = descending_triple(rng);
    const auto c = gl3_conditions(p, x[0], x[1], x[2], ConditionReading::from_inverse);
    return (c.a && c.b) == is_in_G_pos(gl3_g_entries(p, x[0], x[1], x[2])).verdict;
  });
  s.check(
      "gl_small_oracles", "gl3_equivalence_printed",
      [&](Sampler& rng, std::size_t) {
        const GL3Params p = gl3_params(s, rng);
        const Triple x = descending_triple(rng);
        const auto c = gl3_conditions(p, x[0], x[1], x[2], ConditionReading::printed);
        return (c.a && c.b) == is_in_G_pos(gl3_g_entries(p, x[0], x[1], x[2])).verdict;
      },
      true);
  s.check("gl_small_oracles", "gl3_members_descending", [&](Sampler& rng, std::size_t) {
    const GL3Params p = gl3_params(s, rng);
    const Rational t = rng.log_uniform(make_rational(1, 4096), 4096);
    const Rational u = rng.log_uniform(make_rational(1, 64), 64);
    const Matrix g = gl3_g_entries(p, t, u, 1);
    return !is_in_G_pos(g).verdict || (t > u && u > 1);
  });
  s.check("gl_small_oracles", "gl3_redundant_entries", [&](Sampler& rng, std::size_t) {
    const GL3Params p = gl3_params(s, rng);
    const Triple x = descending_triple(rng);
    const auto c = gl3_conditions(p, x[0], x[1], x[2], ConditionReading::from_inverse);
    if (!(c.a && c.b))
      return true;
    const Matrix g = gl3_g_entries(p, x[0], x[1], x[2]);
    const Matrix gi = inverse(g);
    return g(0, 0) > 0 && g(0, 1) > 0 && g(1, 0) > 0 && g(1, 1) > 0 && g(1, 2) > 0 &&
           g(2, 1) > 0 && g(2, 2) > 0 && gi(0, 0) > 0 && gi(2, 2) > 0;
  });
}

} // namespace

SuiteReport run_property_suite(const ScanConfig& cfg, const SuiteHooks& hooks) {
  cfg.validate();
  SuiteRunner s(cfg, hooks);
  linalg_checks(s, cfg.n);
  pinning_checks(s, cfg.n);
  flag_checks(s, cfg.n);
  tori_checks(s, cfg.n);
  pimap_checks(s, cfg.n);
  gl_small_checks(s);
  return {cfg, s.take()};
}

} // namespace tpos
