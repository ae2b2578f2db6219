#include "grassgeo/matrix_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "json_matrix.hpp"

namespace grassgeo {

namespace detail {

namespace {

double number_at(const nlohmann::json& v, const char* what) {
  if (!v.is_number()) {
    throw Error(ErrorCode::Parse, fmt::format("{} is not a number", what));
  }
  return v.get<double>();
}

std::string num(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::BadParameter,
                "cannot serialize a non-finite matrix entry");
  }
  return fmt::format("{:.17g}", x);
}

}  // namespace

Matrix matrix_from_json(const nlohmann::json& rows, Field field) {
  if (!rows.is_array() || rows.empty()) {
    throw Error(ErrorCode::Parse, "matrix data must be a non-empty array");
  }
  const auto n_rows = static_cast<Index>(rows.size());
  if (!rows[0].is_array() || rows[0].empty()) {
    throw Error(ErrorCode::Parse, "matrix rows must be non-empty arrays");
  }
  const auto n_cols = static_cast<Index>(rows[0].size());
  ComplexMatrix m(n_rows, n_cols);
  for (Index i = 0; i < n_rows; ++i) {
    const nlohmann::json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n_cols) {
      throw Error(ErrorCode::Parse,
                  fmt::format("row {} does not have {} entries", i, n_cols));
    }
    for (Index j = 0; j < n_cols; ++j) {
      const nlohmann::json& e = row[static_cast<std::size_t>(j)];
      if (e.is_array()) {
        if (field == Field::Real) {
          throw Error(ErrorCode::Parse,
                      fmt::format("entry ({}, {}) is a complex pair in a real "
                                  "matrix",
                                  i, j));
        }
        if (e.size() != 2) {
          throw Error(ErrorCode::Parse,
                      fmt::format("entry ({}, {}) is not a [re, im] pair", i, j));
        }
        m(i, j) = Complex(number_at(e[0], "real part"),
                          number_at(e[1], "imaginary part"));
      } else {
        m(i, j) = Complex(number_at(e, "matrix entry"), 0.0);
      }
    }
  }
  return Matrix(field, std::move(m));
}

std::string matrix_data_to_json(const Matrix& m, const std::string& indent) {
  std::string out = "[\n";
  for (Index i = 0; i < m.rows(); ++i) {
    out += indent + "  [";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      const Complex z = m(i, j);
      if (m.field() == Field::Real) {
        out += num(z.real());
      } else {
        out += "[" + num(z.real()) + ", " + num(z.imag()) + "]";
      }
    }
    out += i + 1 < m.rows() ? "],\n" : "]\n";
  }
  out += indent + "]";
  return out;
}

}  // namespace detail

Matrix parse_matrix_file(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, fmt::format("invalid JSON: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("field") || !doc.contains("n") ||
      !doc.contains("data")) {
    throw Error(ErrorCode::Parse,
                "matrix file needs \"field\", \"n\" and \"data\" members");
  }
  if (!doc["field"].is_string()) {
    throw Error(ErrorCode::Parse, "\"field\" must be a string");
  }
  const Field field = parse_field(doc["field"].get<std::string>());
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw Error(ErrorCode::Parse, "\"n\" must be a positive integer");
  }
  const auto n = static_cast<Index>(doc["n"].get<long long>());
  Matrix m = detail::matrix_from_json(doc["data"], field);
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::Parse,
                fmt::format("data is {}x{} but n = {}", m.rows(), m.cols(), n));
  }
  return m;
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Parse,
                fmt::format("cannot open matrix file '{}'", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix_file(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::string format_matrix_file(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix files hold square matrices");
  }
  return fmt::format("{{\n  \"field\": \"{}\",\n  \"n\": {},\n  \"data\": {}\n}}\n",
                     to_string(m.field()), m.rows(),
                     detail::matrix_data_to_json(m, "  "));
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::Parse,
                fmt::format("cannot write matrix file '{}'", path.string()));
  }
  out << format_matrix_file(m);
}

}  // namespace grassgeo
