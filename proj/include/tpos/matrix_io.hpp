#pragma once

#include "tpos/matrix.hpp"

#include <filesystem>
#include <istream>
#include <string>

namespace tpos {

/// Plain-text matrix: the dimension n, then n*n rationals ("num/den" or
/// integers), whitespace separated. Throws InputError.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::filesystem::path& path);

/// Inverse of read_matrix: n on the first line, one row per line.
std::string format_matrix(const Matrix& m);

} // namespace tpos
