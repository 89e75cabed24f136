#include "sedeon/residual_report.hpp"

#include <algorithm>
#include <cmath>

#include "sedeon/sedeon.hpp"

namespace sedeon {

void ResidualReport::add(std::string equation, double max_residual, double tolerance) {
  if (!std::isfinite(max_residual) || !std::isfinite(tolerance)) {
    throw DomainError("non-finite residual for " + equation);
  }
  const bool pass = max_residual <= tolerance;
  entries_.push_back({std::move(equation), max_residual, tolerance, pass});
}

void ResidualReport::append(const ResidualReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool ResidualReport::all_pass() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const ResidualEntry& e) { return e.pass; });
}

const ResidualEntry& ResidualReport::at(const std::string& equation) const {
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const ResidualEntry& e) { return e.equation == equation; });
  if (it == entries_.end()) throw DomainError("no residual labelled " + equation);
  return *it;
}

}  // namespace sedeon
