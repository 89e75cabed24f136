#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "sedeon/matrix_rep.hpp"
#include "sedeon/residual_report.hpp"
#include "sedeon/sedeon.hpp"

namespace sedeon {

// Shared JSON encodings:
//   sedeon  - array of 16 [re, im] pairs, n-major
//   matrix  - array of rows, each row an array of [re, im] pairs
//   report  - array of {"equation", "max_residual", "tolerance", "pass"}

[[nodiscard]] nlohmann::json to_json(const Sedeon& s);
[[nodiscard]] nlohmann::json to_json(Complex z);
[[nodiscard]] nlohmann::json to_json(const Matrix4& m);
[[nodiscard]] nlohmann::json to_json(const Matrix16& m);
[[nodiscard]] nlohmann::json to_json(const ResidualReport& r);

/// Throws DomainError when the value is not exactly 16 pairs of finite numbers.
[[nodiscard]] Sedeon sedeon_from_json(const nlohmann::json& j);

/// Parses text first; JSON syntax errors are reported as DomainError too.
[[nodiscard]] Sedeon parse_sedeon_json(std::string_view text);

}  // namespace sedeon
