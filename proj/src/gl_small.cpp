#include "tpos/gl_small.hpp"

#include "tpos/errors.hpp"

#include <sstream>

namespace tpos::gl_small {

void GL2Params::validate() const {
  if (a <= 0 || c <= 0)
    throw PreconditionError("GL2 parameters must be positive");
}

Matrix gl2_torus_matrix(const GL2Params& p, const Rational& t, const Rational& s) {
  p.validate();
  if (t == 0 || s == 0)
    throw PreconditionError("torus coordinates must be nonzero");
  const Rational sum = p.a + p.c;
  return Matrix{{(t * p.c + s * p.a) / sum, (t - s) / sum},
                {p.a * p.c * (t - s) / sum, (t * p.a + s * p.c) / sum}};
}

bool gl2_membership(const GL2Params& p, const Rational& t, const Rational& s) {
  p.validate();
  if (t <= 0 || s <= 0)
    throw PreconditionError("gl2_membership needs t, s > 0");
  return t / s > 1;
}

TorusFrame gl2_frame(const GL2Params& p) {
  p.validate();
  return frame_from_unipotents(y_gen(2, 1, p.a), y_gen(2, 1, p.c));
}

// ---------------------------------------------------------------------------

void GL3Params::validate() const {
  for (const auto* x : {&a, &b, &c, &a_prime, &b_prime, &c_prime})
    if (*x <= 0)
      throw PreconditionError("GL3 parameters must be positive");
  if (a * c - b <= 0 || a_prime * c_prime - b_prime <= 0)
    throw PreconditionError("GL3 parameters need ac > b and a'c' > b'");
}

Rational GL3Params::z_corner() const {
  return a * c + a_prime * c + a_prime * c_prime - b - b_prime;
}

Rational GL3Params::z_corner_minor() const { return a * c_prime + b + b_prime; }

Matrix GL3Params::u() const { return Matrix{{1, 0, 0}, {a, 1, 0}, {b, c, 1}}; }

Matrix GL3Params::v() const {
  return Matrix{{1, 0, 0}, {a_prime, 1, 0}, {b_prime, c_prime, 1}};
}

Matrix gl3_S(const GL3Params& p) {
  p.validate();
  const auto& [a, b, c, ap, bp, cp] = p;
  const Rational A = p.z_corner(), C = p.z_corner_minor();
  return Matrix{{1, -(c + cp) / C, 1 / A},
                {a, (-a * c + b + bp) / C, -ap / A},
                {b, (a * c * cp - b * cp + bp * c) / C, (ap * cp - bp) / A}};
}

Matrix gl3_S_inverse(const GL3Params& p) {
  p.validate();
  const auto& [a, b, c, ap, bp, cp] = p;
  const Rational A = p.z_corner(), C = p.z_corner_minor();
  return Matrix{{bp / C, cp / C, 1 / C},
                {-(a * ap * cp - a * bp + ap * b) / A, (ap * cp - b - bp) / A, (a + ap) / A},
                {a * c - b, -c, 1}};
}

Matrix gl3_g_entries(const GL3Params& p, const Rational& t, const Rational& s, const Rational& r) {
  p.validate();
  if (t == 0 || s == 0 || r == 0)
    throw PreconditionError("torus coordinates must be nonzero");
  const auto& [a, b, c, ap, bp, cp] = p;
  const Rational A = p.z_corner(), C = p.z_corner_minor();
  const Rational AC = A * C;
  const Rational lower = a * c - b, lower_p = ap * cp - bp;
  const Rational ts = t - s, sr = s - r;
  // Factored forms where the published ones are exact; the s-coefficient of
  // the others carries the 1/(AC) the typeset version drops.
  return Matrix{
      {bp * t / C + (c + cp) * (a * ap * cp - a * bp + ap * b) * s / AC + lower * r / A,
       cp * ts / C + c * sr / A, ts / C - sr / A},
      {a * bp * ts / C + ap * lower * sr / A,
       a * cp * t / C + (b + bp - a * c) * (ap * cp - b - bp) * s / AC + ap * c * r / A,
       a * ts / C + ap * sr / A},
      {b * bp * ts / C - lower * lower_p * sr / A, b * cp * ts / C + c * lower_p * sr / A,
       b * t / C + (a * c * cp - b * cp + bp * c) * (a + ap) * s / AC + lower_p * r / A}};
}

Gl3Conditions gl3_conditions(const GL3Params& p, const Rational& t, const Rational& s,
                             const Rational& r, ConditionReading reading) {
  p.validate();
  if (!(t > s && s > r && r > 0))
    throw PreconditionError("gl3_conditions needs t > s > r > 0");
  const auto& [a, b, c, ap, bp, cp] = p;
  const Rational A = p.z_corner(), C = p.z_corner_minor();
  const Rational lower = a * c - b, lower_p = ap * cp - bp;
  const Rational q1 = (t / s - 1) / (1 - r / s);
  const Rational q2 = (s / r - 1) / (1 - s / t);

  Gl3Conditions out;
  out.a = q1 > C / A && q1 > lower * lower_p * C / (b * bp * A);
  if (reading == ConditionReading::printed)
    out.b = q2 > bp / lower_p && q2 > lower / b;
  else
    out.b = q2 > A / C && q2 > b * bp * A / (lower * lower_p * C);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using R = Rational;

#define TPOS_FORM(entry, inv, text, expr)                                                        \
  PrintedForm {                                                                                  \
    entry, text, inv, [](const GL3Params& p, const R& t, const R& s, const R& r) -> R {          \
      const auto& [a, b, c, ap, bp, cp] = p;                                                     \
      const R A = p.z_corner(), C = p.z_corner_minor();                                          \
      (void)a, (void)b, (void)c, (void)ap, (void)bp, (void)cp, (void)A, (void)C;                 \
      (void)t, (void)s, (void)r;                                                                 \
      return expr;                                                                               \
    }                                                                                            \
  }

std::vector<PrintedForm> make_printed_forms() {
  return {
      TPOS_FORM("g11", false, "b't/C+(c+c')(aa'c'-ab'+ab')s+(ac-b)r/A",
                bp * t / C + (c + cp) * (a * ap * cp - a * bp + a * bp) * s + (a * c - b) * r / A),
      TPOS_FORM("g12", false, "c't/C-(c+c')(a'c'-b-b')s-cr/A",
                cp * t / C - (c + cp) * (ap * cp - b - bp) * s - c * r / A),
      TPOS_FORM("g12", false, "c'(t-s)/C+c(s-r)/A", cp * (t - s) / C + c * (s - r) / A),
      TPOS_FORM("g13", false, "t/C-(a+a')(c+c')s+r/A", t / C - (a + ap) * (c + cp) * s + r / A),
      TPOS_FORM("g13", false, "(t-s)/C-(s-r)/A", (t - s) / C - (s - r) / A),
      TPOS_FORM("g21", false, "ab't/C-(b+b'-ac)(aa'c'-ab'+a'b)s-a'(ac-b)r/A",
                a * bp * t / C - (b + bp - a * c) * (a * ap * cp - a * bp + ap * b) * s -
                    ap * (a * c - b) * r / A),
      TPOS_FORM("g21", false, "ab'(t-s)/C+a'(ac-b)(s-r)/A",
                a * bp * (t - s) / C + ap * (a * c - b) * (s - r) / A),
      TPOS_FORM("g22", false, "ac't/C+(b+b'-ac)(a'c'-b-b')s+a'cr/A",
                a * cp * t / C + (b + bp - a * c) * (ap * cp - b - bp) * s + ap * c * r / A),
      TPOS_FORM("g22", false, "ac'(t-s)/C+(a'c'-b'+ac-b)(b+b'+ac')s+a'cr/A",
                a * cp * (t - s) / C + (ap * cp - bp + a * c - b) * (b + bp + a * cp) * s +
                    ap * c * r / A),
      TPOS_FORM("g23", false, "at/C+(b+b'-ac)(a+a')s-a'r/A",
                a * t / C + (b + bp - a * c) * (a + ap) * s - ap * r / A),
      TPOS_FORM("g23", false, "a(t-s)/C+a'(s-r)/A", a * (t - s) / C + ap * (s - r) / A),
      TPOS_FORM("g31", false, "bb't/C-(acc'-bc'+b'c)(aa'c'-ab'+a'b)s+(ac-b)(a'c'-b')r/A",
                b * bp * t / C -
                    (a * c * cp - b * cp + bp * c) * (a * ap * cp - a * bp + ap * b) * s +
                    (a * c - b) * (ap * cp - bp) * r / A),
      TPOS_FORM("g31", false, "bb'(t-s)/C-(ac-b)(a'c'-b')(s-r)/A",
                b * bp * (t - s) / C - (a * c - b) * (ap * cp - bp) * (s - r) / A),
      TPOS_FORM("g32", false, "bc't/A+(acc'-bc'+b'c)(a'c'-b-b')s-c(a'c'-b')r/A",
                b * cp * t / A + (a * c * cp - b * cp + bp * c) * (ap * cp - b - bp) * s -
                    c * (ap * cp - bp) * r / A),
      TPOS_FORM("g32", false, "bc'(t-s)/A+c(a'c'-b')(s-r)/A",
                b * cp * (t - s) / A + c * (ap * cp - bp) * (s - r) / A),
      TPOS_FORM("g33", false, "bt/C+(acc'-bc'+b'c)(a+a')s+(a'c'-b')r/A",
                b * t / C + (a * c * cp - b * cp + bp * c) * (a + ap) * s + (ap * cp - bp) * r / A),
      TPOS_FORM("g'11", true, "b't^-1/C+ac's^-1/C+br^-1/C",
                bp / t / C + a * cp / s / C + b / r / C),
      TPOS_FORM("g'13", true, "b't^-1/(AC)-a'cs^-1/(AC)+(a'c'-b')r^-1/(AC)",
                bp / t / (A * C) - ap * c / s / (A * C) + (ap * cp - bp) / r / (A * C)),
      TPOS_FORM("g'13", true, "(a'c'-b')(r^-1-s^-1)/(AC)-b'(s^-1-t^-1)/(AC)",
                (ap * cp - bp) * (1 / r - 1 / s) / (A * C) - bp * (1 / s - 1 / t) / (A * C)),
      TPOS_FORM("g'31", true, "(ac-b)t^-1-acs^-1+br^-1", (a * c - b) / t - a * c / s + b / r),
      TPOS_FORM("g'31", true, "b(r^-1-s^-1)-(ac-b)(s^-1-t^-1)",
                b * (1 / r - 1 / s) - (a * c - b) * (1 / s - 1 / t)),
      TPOS_FORM("g'33", true, "(ac-b)t^-1/A+a'cs^-1/A+(a'c'-b')r^-1/A",
                (a * c - b) / t / A + ap * c / s / A + (ap * cp - bp) / r / A),
  };
}

#undef TPOS_FORM

std::pair<std::size_t, std::size_t> entry_position(const std::string& entry) {
  const std::size_t k = entry.size();
  return {static_cast<std::size_t>(entry[k - 2] - '1'), static_cast<std::size_t>(entry[k - 1] - '1')};
}

} // namespace

const std::vector<PrintedForm>& printed_forms() {
  static const std::vector<PrintedForm> forms = make_printed_forms();
  return forms;
}

std::size_t ReconciliationLog::disagreeing() const {
  std::size_t k = 0;
  for (const auto& e : entries)
    if (!e.agrees)
      ++k;
  return k;
}

std::string ReconciliationLog::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.agrees ? "agrees    " : "DISAGREES ") << e.entry << " = " << e.text;
    if (e.entry.find('\'') != std::string::npos)
      os << "  [matches S^-1 diag(1/t,1/s,1/r) S: "
         << (e.agrees_with_swapped_conjugation ? "yes" : "no") << "]";
    os << "  (" << e.samples << " samples)\n";
  }
  return os.str();
}

ReconciliationLog reconcile_printed_forms(const std::vector<Gl3Sample>& samples) {
  ReconciliationLog log;
  for (const auto& form : printed_forms())
    log.entries.push_back({form.entry, form.text, true, true, 0});

  for (const auto& [params, tsr] : samples) {
    const auto& [t, s, r] = tsr;
    const Matrix S = gl3_S(params), S_inv = gl3_S_inverse(params);
    const std::array<Rational, 3> d{t, s, r}, d_inv{1 / t, 1 / s, 1 / r};
    const Matrix g = S * Matrix::diagonal(d) * S_inv;
    const Matrix g_inv = S * Matrix::diagonal(d_inv) * S_inv;
    const Matrix swapped = S_inv * Matrix::diagonal(d_inv) * S;
    for (std::size_t k = 0; k < printed_forms().size(); ++k) {
      const auto& form = printed_forms()[k];
      auto& entry = log.entries[k];
      const auto [i, j] = entry_position(form.entry);
      const Rational value = form.eval(params, t, s, r);
      entry.agrees = entry.agrees && value == (form.of_inverse ? g_inv : g)(i, j);
      if (form.of_inverse)
        entry.agrees_with_swapped_conjugation =
            entry.agrees_with_swapped_conjugation && value == swapped(i, j);
      ++entry.samples;
    }
  }
  return log;
}

RegionReport gl3_eigen_region_probe(const LowerParams& base,
                                    const std::vector<LowerParams>& partner_samples,
                                    const std::vector<Triple>& triples) {
  if (base.a <= 0 || base.b <= 0 || base.c <= 0 || base.a * base.c - base.b <= 0)
    throw PreconditionError("base parameters must satisfy a, b, c > 0 and ac > b");
  RegionReport report;
  const Rational bound = (base.a * base.c - base.b) / base.b;
  for (const auto& triple : triples) {
    const auto& [t, s, r] = triple;
    if (!(t > s && s > r && r > 0))
      continue;
    bool realized = false;
    for (const auto& partner : partner_samples) {
      GL3Params p{base.a, base.b, base.c, partner.a, partner.b, partner.c};
      if (partner.a <= 0 || partner.b <= 0 || partner.c <= 0 ||
          partner.a * partner.c - partner.b <= 0)
        continue;
      if (is_in_G_pos(gl3_g_entries(p, t, s, r))) {
        realized = true;
        break;
      }
    }
    (realized ? report.realized : report.unrealized).push_back(triple);
    const Rational q2 = (s / r - 1) / (1 - s / t);
    if (!(q2 > bound)) {
      report.bound_excluded.push_back(triple);
      if (realized)
        report.bound_excluded_realized.push_back(triple);
    }
  }
  return report;
}

} // namespace tpos::gl_small
