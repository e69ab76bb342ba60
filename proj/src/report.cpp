#include "tpos/report.hpp"

#include "tpos/errors.hpp"

#include <fstream>
#include <sstream>

namespace tpos {

using nlohmann::json;

namespace {

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v)
    out.push_back(to_fraction_string(q));
  return out;
}

json optional_rational(const std::optional<Rational>& q) {
  return q ? json(to_fraction_string(*q)) : json(nullptr);
}

json optional_rationals(const std::optional<std::vector<Rational>>& v) {
  return v ? rationals(*v) : json(nullptr);
}

Rational rational_of(const json& j) { return parse_rational(j.get<std::string>()); }

std::vector<Rational> rationals_of(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : j)
    out.push_back(rational_of(x));
  return out;
}

std::optional<Rational> optional_rational_of(const json& j) {
  if (j.is_null())
    return std::nullopt;
  return rational_of(j);
}

std::optional<std::vector<Rational>> optional_rationals_of(const json& j) {
  if (j.is_null())
    return std::nullopt;
  return rationals_of(j);
}

json frame_json(const FrameSample& f) {
  return {{"index", f.index}, {"u_params", rationals(f.u_params)}, {"v_params", rationals(f.v_params)}};
}

FrameSample frame_of(const json& j) {
  return {j.at("index").get<std::size_t>(), rationals_of(j.at("u_params")),
          rationals_of(j.at("v_params"))};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

std::string optional_text(const std::optional<Rational>& q) {
  return q ? to_fraction_string(*q) : "";
}

} // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json")
    return ReportFormat::json;
  if (name == "csv")
    return ReportFormat::csv;
  throw InputError("unknown report format '" + name + "' (expected json or csv)");
}

json to_json(const ScanConfig& cfg) {
  return {{"n", cfg.n},
          {"seed", cfg.seed},
          {"samples", cfg.samples},
          {"per_frame", cfg.per_frame},
          {"grid", {{"lo", to_fraction_string(cfg.grid_lo)}, {"hi", to_fraction_string(cfg.grid_hi)}}},
          {"params",
           {{"lo", to_fraction_string(cfg.param_lo)}, {"hi", to_fraction_string(cfg.param_hi)}}},
          {"p_tol", to_fraction_string(cfg.p_tol)}};
}

ScanConfig scan_config_from_json(const json& j) {
  ScanConfig cfg;
  cfg.n = j.at("n").get<std::size_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.samples = j.at("samples").get<std::size_t>();
  cfg.per_frame = j.at("per_frame").get<std::size_t>();
  cfg.grid_lo = rational_of(j.at("grid").at("lo"));
  cfg.grid_hi = rational_of(j.at("grid").at("hi"));
  cfg.param_lo = rational_of(j.at("params").at("lo"));
  cfg.param_hi = rational_of(j.at("params").at("hi"));
  cfg.p_tol = rational_of(j.at("p_tol"));
  return cfg;
}

json to_json(const ConjectureReport& r) {
  json frames = json::array();
  for (const auto& f : r.frames_a)
    frames.push_back({{"frame", frame_json(f.frame)},
                      {"samples", f.samples},
                      {"members", f.members},
                      {"witness_m", optional_rational(f.witness_m)},
                      {"verdict", f.nonempty() ? "nonempty" : "inconclusive"}});
  for (const auto& f : r.frames_b)
    frames.push_back({{"frame", frame_json(f.frame)},
                      {"lower", optional_rational(f.bracket.lower)},
                      {"upper", optional_rational(f.bracket.upper)},
                      {"failing_witness", optional_rationals(f.bracket.failing_witness)},
                      {"passing_witness", optional_rationals(f.bracket.passing_witness)},
                      {"warnings", f.bracket.warnings}});
  json counter = json::array();
  for (const auto& c : r.counterexamples)
    counter.push_back({{"seed", c.seed},
                       {"n", c.n},
                       {"frame", frame_json(c.frame)},
                       {"sample_index", c.sample_index},
                       {"diag", rationals(c.diag)}});
  return {{"config", to_json(r.config)},
          {"part", std::string(1, r.part)},
          {"status", r.status},
          {"frames", frames},
          {"counterexamples", counter},
          {"totals",
           {{"samples", r.total_samples},
            {"members", r.total_members},
            {"inconclusive_frames", r.inconclusive_frames},
            {"counterexamples", r.counterexamples.size()}}}};
}

ConjectureReport conjecture_report_from_json(const json& j) {
  ConjectureReport r;
  try {
    r.config = scan_config_from_json(j.at("config"));
    const auto part = j.at("part").get<std::string>();
    if (part != "a" && part != "b")
      throw InputError("report part must be a or b");
    r.part = part[0];
    r.status = j.at("status").get<std::string>();
    for (const auto& f : j.at("frames")) {
      if (r.part == 'a') {
        FrameScanA s;
        s.frame = frame_of(f.at("frame"));
        s.samples = f.at("samples").get<std::size_t>();
        s.members = f.at("members").get<std::size_t>();
        s.witness_m = optional_rational_of(f.at("witness_m"));
        r.frames_a.push_back(std::move(s));
      } else {
        FrameScanB s;
        s.frame = frame_of(f.at("frame"));
        s.bracket.lower = optional_rational_of(f.at("lower"));
        s.bracket.upper = optional_rational_of(f.at("upper"));
        s.bracket.failing_witness = optional_rationals_of(f.at("failing_witness"));
        s.bracket.passing_witness = optional_rationals_of(f.at("passing_witness"));
        s.bracket.warnings = f.at("warnings").get<std::vector<std::string>>();
        r.frames_b.push_back(std::move(s));
      }
    }
    for (const auto& c : j.at("counterexamples"))
      r.counterexamples.push_back({c.at("seed").get<std::uint64_t>(), c.at("n").get<std::size_t>(),
                                   frame_of(c.at("frame")), c.at("sample_index").get<std::size_t>(),
                                   rationals_of(c.at("diag"))});
    const auto& totals = j.at("totals");
    r.total_samples = totals.at("samples").get<std::size_t>();
    r.total_members = totals.at("members").get<std::size_t>();
    r.inconclusive_frames = totals.at("inconclusive_frames").get<std::size_t>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return r;
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"module", c.module},
                      {"name", c.name},
                      {"checked", c.checked},
                      {"failures", c.failures},
                      {"first_failure", c.first_failure},
                      {"informational", c.informational}});
  return {{"config", to_json(r.config)}, {"checks", checks}, {"passed", r.passed()}};
}

std::string render_report(const ConjectureReport& r, ReportFormat format) {
  if (format == ReportFormat::json)
    return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  if (r.part == 'a') {
    out << "frame,samples,members,witness_m,verdict,counterexamples\n";
    for (const auto& f : r.frames_a) {
      std::size_t bad = 0;
      for (const auto& c : r.counterexamples)
        bad += c.frame.index == f.frame.index;
      out << f.frame.index << ',' << f.samples << ',' << f.members << ','
          << optional_text(f.witness_m) << ',' << (f.nonempty() ? "nonempty" : "inconclusive")
          << ',' << bad << '\n';
    }
  } else {
    out << "frame,lower,upper,warnings\n";
    for (const auto& f : r.frames_b)
      out << f.frame.index << ',' << optional_text(f.bracket.lower) << ','
          << optional_text(f.bracket.upper) << ',' << csv_field(join(f.bracket.warnings, "; "))
          << '\n';
  }
  return out.str();
}

std::string render_report(const SuiteReport& r, ReportFormat format) {
  if (format == ReportFormat::json)
    return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << "module,name,checked,failures,informational,first_failure\n";
  for (const auto& c : r.checks)
    out << c.module << ',' << c.name << ',' << c.checked << ',' << c.failures << ','
        << (c.informational ? "true" : "false") << ',' << csv_field(c.first_failure) << '\n';
  return out.str();
}

void emit_report(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path.string());
  out << text;
  if (!out.flush())
    throw InputError("write failed for " + path.string());
}

} // namespace tpos
