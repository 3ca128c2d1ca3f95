#include "tropcomm/io.hpp"

#include <cctype>
#include <vector>

#include <json.hpp>

#include "tropcomm/error.hpp"
#include "json_util.hpp"

namespace tropcomm {

namespace {

bool is_entry_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r';
}

bool is_row_separator(char c) { return c == ';' || c == '\n'; }

}  // namespace

Matrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> row;
  std::size_t pos = 0;

  auto close_row = [&](std::size_t at) {
    if (row.empty()) return;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(at, "row " + std::to_string(rows.size() + 1) + " has " +
                               std::to_string(row.size()) + " entries, expected " +
                               std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
    row.clear();
  };

  while (pos < text.size()) {
    char c = text[pos];
    if (is_entry_separator(c)) {
      ++pos;
    } else if (is_row_separator(c)) {
      close_row(pos);
      ++pos;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && !is_entry_separator(text[pos]) &&
             !is_row_separator(text[pos])) {
        ++pos;
      }
      std::string_view token = text.substr(start, pos - start);
      try {
        row.push_back(parse_scalar(token));
      } catch (const ParseError&) {
        throw ParseError(start, "invalid entry '" + std::string(token) + "'");
      }
    }
  }
  close_row(text.size());

  if (rows.empty()) throw ParseError(0, "empty matrix");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  return detail::matrix_from_json(doc);
}

Matrix parse_matrix(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') return parse_matrix_json(text);
    break;
  }
  return parse_matrix_text(text);
}

std::string matrix_to_json(const Matrix& m) {
  return detail::matrix_to_json(m).dump();
}

std::string vector_to_json(const Vector& v) {
  return detail::vector_to_json(v).dump();
}

Vector parse_vector_json(std::string_view text) {
  try {
    return detail::vector_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

namespace detail {

nlohmann::json scalar_to_json(Scalar s) {
  if (s.is_bottom()) return nullptr;
  return s.value();
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_null()) return Scalar::bottom();
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (!j.is_number()) throw ParseError(0, "expected number, null or \"-inf\"");
  return Scalar(j.get<double>());
}

nlohmann::json vector_to_json(const Vector& v) {
  auto out = nlohmann::json::array();
  for (Scalar s : v.entries()) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError(0, "expected a JSON array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i]);
  return v;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(0, "expected a non-empty array of rows");
  }
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw ParseError(0, "rows must be non-empty arrays");
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ParseError(0, "row " + std::to_string(i + 1) + " is not an array of " +
                              std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

}  // namespace detail

}  // namespace tropcomm
