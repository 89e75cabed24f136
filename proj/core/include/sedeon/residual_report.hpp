#pragma once

#include <string>
#include <vector>

namespace sedeon {

struct ResidualEntry {
  std::string equation;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Labelled residual magnitudes with their verdicts, in insertion order.
class ResidualReport {
 public:
  /// Throws DomainError if residual or tolerance is not finite.
  void add(std::string equation, double max_residual, double tolerance);
  void append(const ResidualReport& other);

  [[nodiscard]] const std::vector<ResidualEntry>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool all_pass() const noexcept;
  [[nodiscard]] const ResidualEntry& at(const std::string& equation) const;
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

 private:
  std::vector<ResidualEntry> entries_;
};

}  // namespace sedeon
