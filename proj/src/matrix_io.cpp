#include "tpos/matrix_io.hpp"

#include "tpos/errors.hpp"

#include <fstream>
#include <sstream>

namespace tpos {

Matrix read_matrix(std::istream& in) {
  std::string token;
  if (!(in >> token))
    throw InputError("matrix file is empty");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long v = std::stol(token, &used);
    if (used != token.size() || v < 1)
      throw InputError("");
    n = static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError("bad matrix dimension '" + token + "'");
  }
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> token))
        throw InputError("matrix file ends after " + std::to_string(i * n + j) + " of " +
                         std::to_string(n * n) + " entries");
      m(i, j) = parse_rational(token);
    }
  if (in >> token)
    throw InputError("trailing token '" + token + "' after matrix entries");
  return m;
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path.string());
  return read_matrix(in);
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream out;
  out << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      out << (j ? " " : "") << to_fraction_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

} // namespace tpos
