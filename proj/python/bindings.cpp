#include "tpos/errors.hpp"
#include "tpos/explorer.hpp"
#include "tpos/gl_small.hpp"
#include "tpos/pimap.hpp"
#include "tpos/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may be any
// object whose str() parses (int, Fraction, "n/d").
tpos::Rational to_rational(const py::handle& h) {
  return tpos::parse_rational(std::string(py::str(h)));
}

py::object to_fraction(const tpos::Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())),
                  py::int_(py::str(q.get_den().get_str())));
}

tpos::Matrix to_matrix(const py::sequence& rows) {
  const std::size_t n = py::len(rows);
  if (n == 0)
    throw tpos::InputError("empty matrix");
  tpos::Matrix m(n, py::len(rows[0]));
  for (std::size_t i = 0; i < n; ++i) {
    py::sequence row = rows[i];
    if (py::len(row) != m.cols())
      throw tpos::InputError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = to_rational(row[j]);
  }
  return m;
}

py::list from_matrix(const tpos::Matrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.append(to_fraction(m(i, j)));
    rows.append(row);
  }
  return rows;
}

std::vector<tpos::Rational> to_rationals(const py::sequence& s) {
  std::vector<tpos::Rational> out;
  for (const auto& x : s)
    out.push_back(to_rational(x));
  return out;
}

py::list from_rationals(const std::vector<tpos::Rational>& v) {
  py::list out;
  for (const auto& q : v)
    out.append(to_fraction(q));
  return out;
}

py::tuple positivity(const tpos::PositivityReport& r) {
  if (!r.witness)
    return py::make_tuple(r.verdict, py::none());
  return py::make_tuple(r.verdict, py::make_tuple(r.witness->index.rows, r.witness->index.cols,
                                                  to_fraction(r.witness->value)));
}

tpos::Sign sign_of(bool lower) { return lower ? tpos::Sign::lower : tpos::Sign::upper; }

tpos::ScanConfig scan_config(std::size_t n, std::uint64_t seed, std::size_t samples,
                             std::size_t per_frame, const py::object& grid,
                             const py::object& p_tol) {
  tpos::ScanConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.per_frame = per_frame;
  if (!grid.is_none()) {
    py::sequence g = grid;
    cfg.grid_lo = to_rational(g[0]);
    cfg.grid_hi = to_rational(g[1]);
  }
  if (!p_tol.is_none())
    cfg.p_tol = to_rational(p_tol);
  cfg.validate();
  return cfg;
}

} // namespace

PYBIND11_MODULE(_tpos, m) {
  m.doc() = "Exact total positivity, flags and tori for GL_n";

  py::register_exception<tpos::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<tpos::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<tpos::SingularMatrixError>(m, "SingularMatrixError", PyExc_ValueError);
  py::register_exception<tpos::InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<tpos::NumericalFailure>(m, "NumericalFailure", PyExc_RuntimeError);

  m.def("determinant", [](const py::sequence& g) { return to_fraction(tpos::determinant(to_matrix(g))); });
  m.def("inverse", [](const py::sequence& g) { return from_matrix(tpos::inverse(to_matrix(g))); });
  m.def("char_poly", [](const py::sequence& g) { return from_rationals(tpos::char_poly(to_matrix(g))); },
        "coefficients from the constant term up");

  m.def("is_in_G_pos", [](const py::sequence& g) { return positivity(tpos::is_in_G_pos(to_matrix(g))); },
        "(verdict, witness) with witness = (rows, cols, value) or None");
  m.def("is_in_U_pos",
        [](const py::sequence& u, bool lower) {
          return positivity(tpos::is_in_U_pos(to_matrix(u), sign_of(lower)));
        },
        py::arg("u"), py::arg("lower") = true);
  m.def("unipotent_from_word",
        [](std::size_t n, const std::vector<std::size_t>& word, const py::sequence& params,
           bool lower) {
          return from_matrix(tpos::unipotent_from_word(
              {{n, word}, to_rationals(params), sign_of(lower)}));
        },
        py::arg("n"), py::arg("word"), py::arg("params"), py::arg("lower") = true);
  m.def("factor_along_word",
        [](const py::sequence& u, const std::vector<std::size_t>& word, bool lower) -> py::object {
          const tpos::Matrix mu = to_matrix(u);
          auto params = tpos::factor_along_word(mu, {mu.size(), word}, sign_of(lower));
          if (!params)
            return py::none();
          return from_rationals(*params);
        },
        py::arg("u"), py::arg("word"), py::arg("lower") = true);

  m.def("tilde_map", [](const py::sequence& u) { return from_matrix(tpos::tilde_map(to_matrix(u))); });
  m.def("torus_frame",
        [](const py::sequence& u, const py::sequence& v) {
          return from_matrix(tpos::frame_from_unipotents(to_matrix(u), to_matrix(v)).s());
        },
        "S for the pair (u B+ u^-1, v^-1 B+ v)");
  m.def("torus_element",
        [](const py::sequence& u, const py::sequence& v, const py::sequence& diag) {
          const auto frame = tpos::frame_from_unipotents(to_matrix(u), to_matrix(v));
          return from_matrix(tpos::torus_element(frame, tpos::TorusElement(to_rationals(diag))));
        });
  m.def("same_torus", [](const py::sequence& s1, const py::sequence& s2) {
    return tpos::same_torus(tpos::TorusFrame(to_matrix(s1)), tpos::TorusFrame(to_matrix(s2)));
  });
  m.def("pi", [](const py::sequence& g) { return from_matrix(tpos::pi(to_matrix(g)).s()); },
        "eigenvector frame of a totally positive matrix");
  m.def("eigenvalues", [](const py::sequence& g) -> py::object {
    const auto e = tpos::eigen_split(to_matrix(g));
    if (e.exact)
      return from_rationals(e.values);
    return py::cast(e.approx_values);
  });

  m.def("gl3_g_entries",
        [](const py::sequence& lower, const py::sequence& lower_prime, const py::sequence& tsr) {
          tpos::gl_small::GL3Params p{to_rational(lower[0]),       to_rational(lower[1]),
                                      to_rational(lower[2]),       to_rational(lower_prime[0]),
                                      to_rational(lower_prime[1]), to_rational(lower_prime[2])};
          return from_matrix(tpos::gl_small::gl3_g_entries(p, to_rational(tsr[0]),
                                                           to_rational(tsr[1]), to_rational(tsr[2])));
        });

  m.def("scan_conjecture",
        [](const std::string& part, std::size_t n, std::uint64_t seed, std::size_t samples,
           std::size_t per_frame, const py::object& grid, const py::object& p_tol) {
          const auto cfg = scan_config(n, seed, samples, per_frame, grid, p_tol);
          const auto report =
              part == "b" ? tpos::scan_conjecture_b(cfg) : tpos::scan_conjecture_a(cfg);
          return tpos::render_report(report, tpos::ReportFormat::json);
        },
        py::arg("part") = "a", py::arg("n") = 3, py::arg("seed") = 42, py::arg("samples") = 1000,
        py::arg("per_frame") = 25, py::arg("grid") = py::none(), py::arg("p_tol") = py::none(),
        "JSON report text");
  m.def("run_property_suite",
        [](std::size_t n, std::uint64_t seed, std::size_t samples) {
          tpos::ScanConfig cfg;
          cfg.n = n;
          cfg.seed = seed;
          cfg.samples = samples;
          return tpos::render_report(tpos::run_property_suite(cfg), tpos::ReportFormat::json);
        },
        py::arg("n") = 3, py::arg("seed") = 42, py::arg("samples") = 50, "JSON report text");
}
