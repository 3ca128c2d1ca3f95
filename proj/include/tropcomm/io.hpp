#pragma once

// Text and JSON forms of matrices and vectors.
//
// Text: entries separated by whitespace or commas, rows by `;` or newlines,
// Bottom written `-inf`, e.g. "0.166 0.861; -0.62 -0.76".
// JSON: array of row arrays with null for Bottom, e.g. [[0, null], [1, 2]].

#include <string>
#include <string_view>

#include "tropcomm/matrix.hpp"

namespace tropcomm {

/// Parses the text form. Throws ParseError carrying the byte offset.
Matrix parse_matrix_text(std::string_view text);

/// Parses the JSON form. Throws ParseError.
Matrix parse_matrix_json(std::string_view text);

/// Dispatches on the first non-blank character: `[` means JSON.
Matrix parse_matrix(std::string_view text);

std::string matrix_to_json(const Matrix& m);
/// JSON array with null for Bottom.
std::string vector_to_json(const Vector& v);
Vector parse_vector_json(std::string_view text);

}  // namespace tropcomm
