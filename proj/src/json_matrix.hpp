#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "grassgeo/matfun.hpp"

namespace grassgeo::detail {

/// Row-major nested array; complex entries may be [re, im] or plain numbers.
Matrix matrix_from_json(const nlohmann::json& rows, Field field);

/// Same layout, 17 significant digits, one row per line.
std::string matrix_data_to_json(const Matrix& m, const std::string& indent);

}  // namespace grassgeo::detail
