#pragma once

#include <array>
#include <cstddef>

#include "sedeon/sedeon.hpp"

namespace sedeon {

/// Product of two units u_p u_q = i^quarter_turns * u_index.
///
/// Coefficients of the unit tables are always one of {1, i, -1, -i}, so they are
/// stored as a count of quarter turns and applied by swapping/negating re and im.
struct UnitProduct {
  int quarter_turns;  // 0..3
  int index;          // 0..3

  [[nodiscard]] constexpr Complex coefficient() const noexcept {
    switch (quarter_turns & 3) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }

  friend constexpr bool operator==(UnitProduct, UnitProduct) = default;
};

/// Multiply z by i^q without rounding.
[[nodiscard]] constexpr Complex times_i_pow(Complex z, int q) noexcept {
  switch (q & 3) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return {-z.real(), -z.imag()};
    default: return {z.imag(), -z.real()};
  }
}

/// One unit table: u_0 = 1, u_j u_j = 1, u_1 u_2 = i u_3 and cyclic, anticommuting.
[[nodiscard]] constexpr UnitProduct unit_product(int p, int q) noexcept {
  if (p == 0) return {0, q};
  if (q == 0) return {0, p};
  if (p == q) return {0, 0};
  const int third = 6 - p - q;
  const bool cyclic = (q - p + 3) % 3 == 1;
  return {cyclic ? 1 : 3, third};
}

namespace detail {

constexpr std::array<UnitProduct, 256> build_basis_table() noexcept {
  std::array<UnitProduct, 256> t{};
  for (int m = 0; m < 4; ++m)
    for (int k = 0; k < 4; ++k)
      for (int n = 0; n < 4; ++n)
        for (int l = 0; l < 4; ++l) {
          const UnitProduct e = unit_product(m, n);
          const UnitProduct a = unit_product(k, l);
          t[static_cast<std::size_t>((m * 4 + k) * 16 + (n * 4 + l))] =
              UnitProduct{(e.quarter_turns + a.quarter_turns) & 3, e.index * 4 + a.index};
        }
  return t;
}

inline constexpr std::array<UnitProduct, 256> kBasisTable = build_basis_table();

}  // namespace detail

/// Multiplication rules for the space-time units e_n and the vector units a_k.
///
/// Both triples obey the same table; e-units commute with a-units, so the
/// product of two basis monomials factorises as (e_m e_n)(a_k a_l).
class StructureTable {
 public:
  [[nodiscard]] static constexpr UnitProduct e_rule(int m, int n) noexcept { return unit_product(m, n); }
  [[nodiscard]] static constexpr UnitProduct a_rule(int k, int l) noexcept { return unit_product(k, l); }

  /// (e_m a_k)(e_n a_l) addressed by flat indices (n-major).
  [[nodiscard]] static constexpr UnitProduct basis_rule(std::size_t lhs, std::size_t rhs) noexcept {
    return detail::kBasisTable[lhs * 16 + rhs];
  }
};

}  // namespace sedeon
