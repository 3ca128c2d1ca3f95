#pragma once

// Internal nlohmann::json conversions shared by the io and report code.

#include <json.hpp>

#include "tropcomm/matrix.hpp"

namespace tropcomm::detail {

nlohmann::json scalar_to_json(Scalar s);
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace tropcomm::detail
