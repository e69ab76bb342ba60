#pragma once

#include "tpos/sampling.hpp"
#include "tpos/tori.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tpos {

struct ScanConfig {
  std::size_t n = 3;
  std::uint64_t seed = 42;
  /// Total diagonal samples (part a) or total perturbation samples (part b).
  std::size_t samples = 1000;
  std::size_t per_frame = 25;
  /// Part a: range of t_1..t_{n-1} (t_n = 1). Part b: the p search range.
  Rational grid_lo = make_rational(1, 16);
  Rational grid_hi = 65536;
  /// Range of the unipotent parameters of u and v.
  Rational param_lo = make_rational(1, 4);
  Rational param_hi = 4;
  /// Bracket width at which the minimal-p bisection stops.
  Rational p_tol = make_rational(1, 1000);

  /// Throws PreconditionError when out of range.
  void validate() const;
  std::size_t frames() const { return (samples + per_frame - 1) / per_frame; }
  friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

/// A sampled frame: u, v in U^-_{>0} along the standard reduced word.
struct FrameSample {
  std::size_t index = 0;
  std::vector<Rational> u_params;
  std::vector<Rational> v_params;
  friend bool operator==(const FrameSample&, const FrameSample&) = default;
};

FrameSample sample_frame(const ScanConfig& cfg, std::size_t index);
TorusFrame build_frame(std::size_t n, const FrameSample& f);

/// A member of ct cap G_{>0} whose torus coordinates are not in T^1_{>0}.
struct Counterexample {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  FrameSample frame;
  std::size_t sample_index = 0;
  std::vector<Rational> diag;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Re-executes a counterexample from its data; true iff it is a genuine
/// violation (member of G_{>0} with some chi_i <= 1).
bool replay_counterexample(const Counterexample& c);

struct FrameScanA {
  FrameSample frame;
  std::size_t samples = 0;
  std::size_t members = 0;
  /// Smallest power-of-two M such that (M^{n-1}, ..., M, 1) is a member.
  std::optional<Rational> witness_m;
  bool nonempty() const { return members > 0 || witness_m.has_value(); }
  friend bool operator==(const FrameScanA&, const FrameScanA&) = default;
};

struct PBracket {
  /// Largest tested p with a failing sample; absent if none failed.
  std::optional<Rational> lower;
  /// Smallest tested p without failing samples; absent if all failed.
  std::optional<Rational> upper;
  std::optional<std::vector<Rational>> failing_witness;
  std::optional<std::vector<Rational>> passing_witness;
  std::vector<std::string> warnings;
  friend bool operator==(const PBracket&, const PBracket&) = default;
};

struct FrameScanB {
  FrameSample frame;
  PBracket bracket;
  friend bool operator==(const FrameScanB&, const FrameScanB&) = default;
};

struct ConjectureReport {
  ScanConfig config;
  char part = 'a';
  /// "theorem" for n <= 3, "evidence only" for larger n.
  std::string status;
  std::vector<FrameScanA> frames_a;
  std::vector<FrameScanB> frames_b;
  std::vector<Counterexample> counterexamples;
  std::size_t total_samples = 0;
  std::size_t total_members = 0;
  std::size_t inconclusive_frames = 0;
  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

/// For every sampled frame and diagonal d, whenever S d S^{-1} is totally
/// positive, checks d in T^1_{>0}.
ConjectureReport scan_conjecture_a(const ScanConfig& cfg);

/// Bisection for the least p with S T^p_{>0} S^{-1} inside G_{>0}, judged on
/// `perturbations` fixed relative offsets (chi_i = p (1 + rho_i)) plus edge
/// offsets that put one character just above p.
PBracket search_minimal_p(const ScanConfig& cfg, const TorusFrame& frame, std::uint64_t stream);

ConjectureReport scan_conjecture_b(const ScanConfig& cfg);

struct CheckResult {
  std::string module;
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// Reported but never counted as a suite failure.
  bool informational = false;
};

struct SuiteReport {
  ScanConfig config;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Injection points for negative controls.
struct SuiteHooks {
  TildeFn tilde = tilde_map;
};

SuiteReport run_property_suite(const ScanConfig& cfg, const SuiteHooks& hooks = {});

} // namespace tpos
