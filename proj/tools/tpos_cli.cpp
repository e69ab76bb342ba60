#include "tpos/errors.hpp"
#include "tpos/explorer.hpp"
#include "tpos/matrix_io.hpp"
#include "tpos/pimap.hpp"
#include "tpos/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

std::pair<tpos::Rational, tpos::Rational> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw tpos::InputError("range '" + text + "' must be LO:HI");
  return {tpos::parse_rational(text.substr(0, colon)), tpos::parse_rational(text.substr(colon + 1))};
}

void print_witness(const tpos::PositivityReport& r) {
  if (r.witness)
    std::cout << " (minor " << r.witness->index.to_string() << " = "
              << tpos::to_fraction_string(r.witness->value) << ")";
  std::cout << '\n';
}

int cmd_check(const std::string& path) {
  const tpos::Matrix g = tpos::read_matrix_file(path);
  const auto pos = tpos::is_in_G_pos(g);
  std::cout << "n: " << g.size() << '\n';
  std::cout << "det: " << tpos::to_fraction_string(tpos::determinant(g)) << '\n';
  std::cout << "G_pos: " << (pos.verdict ? "yes" : "no");
  print_witness(pos);
  if (g.is_lower_unitriangular()) {
    const auto up = tpos::is_in_U_pos(g, tpos::Sign::lower);
    std::cout << "U-_pos: " << (up.verdict ? "yes" : "no");
    print_witness(up);
    std::cout << "U-_neg: " << (tpos::is_in_U_neg(g, tpos::Sign::lower).verdict ? "yes" : "no")
              << '\n';
  }
  if (g.is_upper_unitriangular()) {
    const auto up = tpos::is_in_U_pos(g, tpos::Sign::upper);
    std::cout << "U+_pos: " << (up.verdict ? "yes" : "no");
    print_witness(up);
  }
  return kOk;
}

int cmd_tilde(const std::string& path) {
  std::cout << tpos::format_matrix(tpos::tilde_map(tpos::read_matrix_file(path)));
  return kOk;
}

int cmd_intersect(const std::string& u_path, const std::string& v_path) {
  const tpos::Matrix u = tpos::read_matrix_file(u_path);
  const tpos::Matrix v = tpos::read_matrix_file(v_path);
  if (u.size() != v.size())
    throw tpos::InputError("u and v have different sizes");
  const tpos::BorelPoint b = tpos::borel_from_lower(u);
  const tpos::BorelPoint b_prime = tpos::borel_from_lower(tpos::inverse(v));
  const tpos::TorusFrame frame = tpos::intersect_borels(b, b_prime);
  std::cout << tpos::format_matrix(frame.s());
  return kOk;
}

int cmd_pi(const std::string& path) {
  const tpos::Matrix g = tpos::read_matrix_file(path);
  const tpos::EigenData e = tpos::eigen_split(g);
  std::cout << "path: " << (e.exact ? "exact" : "floating") << '\n';
  std::cout << "eigenvalues:";
  if (e.exact)
    for (const auto& x : e.values)
      std::cout << ' ' << tpos::to_fraction_string(x);
  else
    for (double x : e.approx_values)
      std::cout << ' ' << x;
  std::cout << '\n';
  if (!e.exact)
    std::cout << "residual: " << e.residual << '\n';
  const tpos::TorusFrame frame = tpos::pi(g);
  std::cout << "frame:\n" << tpos::format_matrix(frame.s());
  return kOk;
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    tpos::emit_report(text, out);
}

struct ScanFlags {
  std::size_t n = 3;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::size_t per_frame = 25;
  std::string part = "a";
  std::string grid;
  std::string params = "1/4:4";
  std::string p_tol = "1/1000";

  void add_to(CLI::App* app, bool with_part) {
    app->add_option("--n", n, "group size")->check(CLI::Range(2, 16));
    app->add_option("--seed", seed, "root seed");
    app->add_option("--samples", samples, "total samples")->check(CLI::PositiveNumber);
    app->add_option("--per-frame", per_frame, "samples per frame")->check(CLI::PositiveNumber);
    app->add_option("--params", params, "unipotent parameter range LO:HI");
    if (!with_part)
      return;
    app->add_option("--part", part, "conjecture part")->check(CLI::IsMember({"a", "b"}));
    app->add_option("--grid", grid, "diagonal range (part a) or p range (part b), LO:HI");
    app->add_option("--p-tol", p_tol, "bisection tolerance for part b");
  }

  tpos::ScanConfig config() const {
    tpos::ScanConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.per_frame = per_frame;
    std::tie(cfg.param_lo, cfg.param_hi) = parse_range(params);
    if (!grid.empty())
      std::tie(cfg.grid_lo, cfg.grid_hi) = parse_range(grid);
    else if (part == "b")
      std::tie(cfg.grid_lo, cfg.grid_hi) = std::pair{tpos::make_rational(1, 2), tpos::Rational(1 << 20)};
    cfg.p_tol = tpos::parse_rational(p_tol);
    try {
      cfg.validate();
    } catch (const tpos::PreconditionError& e) {
      throw tpos::InputError(e.what());
    }
    return cfg;
  }
};

int run_conjecture(const ScanFlags& flags, tpos::ReportFormat format, const std::string& out) {
  const tpos::ScanConfig cfg = flags.config();
  const tpos::ConjectureReport report =
      flags.part == "a" ? tpos::scan_conjecture_a(cfg) : tpos::scan_conjecture_b(cfg);
  write_output(tpos::render_report(report, format), out);
  if (!report.counterexamples.empty()) {
    std::cerr << report.counterexamples.size() << " counterexample(s)\n";
    return kPropertyFailure;
  }
  return kOk;
}

int run_suite(const ScanFlags& flags, tpos::ReportFormat format, const std::string& out,
              bool corrupt_tilde) {
  tpos::SuiteHooks hooks;
  if (corrupt_tilde)
    hooks.tilde = [](const tpos::Matrix& u) {
      tpos::Matrix t = tpos::tilde_map(u);
      t(0, t.size() - 1) += 1;
      return t;
    };
  const tpos::SuiteReport report = tpos::run_property_suite(flags.config(), hooks);
  write_output(tpos::render_report(report, format), out);
  for (const auto& c : report.checks)
    if (c.failures > 0)
      std::cerr << (c.informational ? "note: " : "FAIL: ") << c.module << '/' << c.name << ": "
                << c.failures << '/' << c.checked << " (" << c.first_failure << ")\n";
  return report.passed() ? kOk : kPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact explorer for totally positive matrices, flags and tori"};
  app.require_subcommand(1);

  std::string path_a, path_b, out, format = "json", kind = "conjecture";
  bool corrupt_tilde = false;
  ScanFlags flags;

  auto* check = app.add_subcommand("check", "total positivity report for a matrix file");
  check->add_option("matrix", path_a)->required();
  auto* tilde = app.add_subcommand("tilde", "tilde map of u with u^-1 in U-_{>0}");
  tilde->add_option("u", path_a)->required();
  auto* intersect = app.add_subcommand("intersect", "torus frame of (u B+ u^-1, v^-1 B+ v)");
  intersect->add_option("u", path_a)->required();
  intersect->add_option("v", path_b)->required();
  auto* pi = app.add_subcommand("pi", "eigenflags and torus of a totally positive matrix");
  pi->add_option("matrix", path_a)->required();

  auto* suite = app.add_subcommand("suite", "run the sampled property suite");
  flags.add_to(suite, false);
  suite->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  suite->add_option("--out", out, "output path (default stdout)");
  suite->add_flag("--corrupt-tilde", corrupt_tilde, "negative control: perturb the tilde map");

  auto* conjecture = app.add_subcommand("conjecture", "scan the positivity conjecture");
  flags.add_to(conjecture, true);
  conjecture->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  conjecture->add_option("--out", out, "output path (default stdout)");

  auto* report = app.add_subcommand("report", "re-run a scan and emit its report");
  flags.add_to(report, true);
  report->add_option("--kind", kind)->check(CLI::IsMember({"conjecture", "suite"}));
  report->add_option("--format", format)->required()->check(CLI::IsMember({"json", "csv"}));
  report->add_option("--out", out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check)
      return cmd_check(path_a);
    if (*tilde)
      return cmd_tilde(path_a);
    if (*intersect)
      return cmd_intersect(path_a, path_b);
    if (*pi)
      return cmd_pi(path_a);
    const auto fmt = tpos::parse_report_format(format);
    if (*suite || (*report && kind == "suite"))
      return run_suite(flags, fmt, out, corrupt_tilde);
    return run_conjecture(flags, fmt, out);
  } catch (const tpos::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const tpos::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const tpos::BoundsError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const tpos::SingularMatrixError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const tpos::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const tpos::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kPropertyFailure;
  }
}
