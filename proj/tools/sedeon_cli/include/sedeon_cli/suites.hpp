#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sedeon/sedeon.hpp"
#include "sedeon/transforms.hpp"

namespace sedeon::cli {

enum class Suite { tables, algebra, transforms, representation, field, all };
enum class OutputFormat { json, csv, text };

[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name);
[[nodiscard]] std::optional<OutputFormat> parse_format(std::string_view name);
[[nodiscard]] std::string_view to_string(Suite s) noexcept;

struct SuiteConfig {
  Suite suite = Suite::all;
  std::uint64_t seed = 42;
  std::size_t sample_count = 100;
  OutputFormat format = OutputFormat::json;
};

/// One invariant with its measured residual. A tolerance of 0 means exact equality.
/// Lower-bound checks pass when measured exceeds the tolerance instead.
struct Check {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;
  bool pass = false;
};

/// Product of two generators from {e1, e2, e3, a1, a2, a3}.
struct GeneratorProduct {
  std::string left;
  std::string right;
  Complex coefficient;
  std::string unit;  // "1", "e3", "a2", "e1a2", ...
  bool matches_table = false;
};

struct SuiteResult {
  std::vector<Check> checks;
  std::vector<GeneratorProduct> products;
  std::vector<ClosedFormLineVerdict> lorentz_audit;

  [[nodiscard]] bool all_pass() const noexcept;
};

/// All 36 ordered products of the six generators (basis 0), or only the 9 within
/// one triple (basis 'e' or 'a'), compared against the printed unit tables.
[[nodiscard]] std::vector<GeneratorProduct> generator_products(char basis = 0);

/// Name of a single-term sedeon: the coefficient is returned separately.
/// Throws ContractViolation if the sedeon has more than one nonzero component.
[[nodiscard]] std::pair<Complex, std::string> monomial(const Sedeon& s);

[[nodiscard]] SuiteResult evaluate_suite(const SuiteConfig& cfg);
void write_suite_result(const SuiteConfig& cfg, const SuiteResult& result, std::ostream& out);

/// Evaluate, write, and return the exit status (0 all pass, 1 any failure).
int run_suite(const SuiteConfig& cfg, std::ostream& out);

}  // namespace sedeon::cli
