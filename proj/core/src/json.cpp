#include "sedeon/json.hpp"

#include <cmath>

namespace sedeon {
namespace {

template <typename M>
nlohmann::json matrix_json(const M& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const Sedeon& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : s.components()) out.push_back(to_json(z));
  return out;
}

nlohmann::json to_json(const Matrix4& m) { return matrix_json(m); }
nlohmann::json to_json(const Matrix16& m) { return matrix_json(m); }

nlohmann::json to_json(const ResidualReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : r.entries()) {
    out.push_back({{"equation", e.equation},
                   {"max_residual", e.max_residual},
                   {"tolerance", e.tolerance},
                   {"pass", e.pass}});
  }
  return out;
}

Sedeon sedeon_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != Sedeon::kSize) {
    throw DomainError("sedeon JSON must be an array of 16 [re, im] pairs");
  }
  Sedeon s;
  for (std::size_t i = 0; i < Sedeon::kSize; ++i) {
    const auto& pair = j[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw DomainError("sedeon JSON entry " + std::to_string(i) + " is not a [re, im] pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw DomainError("sedeon JSON entry " + std::to_string(i) + " is not finite");
    }
    s.flat(i) = Complex{re, im};
  }
  return s;
}

Sedeon parse_sedeon_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed sedeon JSON: ") + e.what());
  }
  return sedeon_from_json(j);
}

}  // namespace sedeon
