#pragma once

// On-disk JSON form of a square matrix:
//   {"field": "real" | "complex", "n": N, "data": [[...], ...]}
// Rows are listed in order; complex entries are [re, im] pairs. Numbers are
// written with 17 significant digits so a write/read cycle is exact.

#include <filesystem>
#include <string>
#include <string_view>

#include "grassgeo/matfun.hpp"

namespace grassgeo {

/// Throws Parse on malformed input or a shape that disagrees with "n".
Matrix parse_matrix_file(std::string_view json_text);
Matrix read_matrix_file(const std::filesystem::path& path);

std::string format_matrix_file(const Matrix& m);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace grassgeo
