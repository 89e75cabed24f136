#include "sedeon/algebra.hpp"

namespace sedeon {
namespace {

void require_pure_vector(const Sedeon& s, const char* op) {
  if (!s.is_pure_vector()) {
    throw ContractViolation(std::string(op) + ": argument has a nonzero sedeon-scalar part");
  }
}

// Product of two space-time scalars held in column k_a of a and column k_b of b.
// Result is a sedeon-scalar (k = 0 column).
Sedeon scalar_column_product(const Sedeon& a, int ka, const Sedeon& b, int kb) noexcept {
  Sedeon out;
  for (int m = 0; m < 4; ++m) {
    const Complex x = a[SedeonIndex(m, ka)];
    if (x == Complex{}) continue;
    for (int n = 0; n < 4; ++n) {
      const Complex y = b[SedeonIndex(n, kb)];
      if (y == Complex{}) continue;
      const UnitProduct e = StructureTable::e_rule(m, n);
      out[SedeonIndex(e.index, 0)] += times_i_pow(x * y, e.quarter_turns);
    }
  }
  return out;
}

}  // namespace

Sedeon basis_element(int n, int k) { return Sedeon::basis(n, k); }

Sedeon linear_combine(Complex c1, const Sedeon& a, Complex c2, const Sedeon& b) noexcept {
  Sedeon out;
  for (std::size_t i = 0; i < Sedeon::kSize; ++i) {
    out[SedeonIndex::from_flat(i)] = c1 * a.flat(i) + c2 * b.flat(i);
  }
  return out;
}

Sedeon mul(const Sedeon& a, const Sedeon& b) noexcept {
  Sedeon::Components acc{};
  const auto& x = a.array();
  const auto& y = b.array();
  for (std::size_t i = 0; i < Sedeon::kSize; ++i) {
    if (x[i] == Complex{}) continue;
    for (std::size_t j = 0; j < Sedeon::kSize; ++j) {
      if (y[j] == Complex{}) continue;
      const UnitProduct p = StructureTable::basis_rule(i, j);
      acc[static_cast<std::size_t>(p.index)] += times_i_pow(x[i] * y[j], p.quarter_turns);
    }
  }
  return Sedeon(acc);
}

Sedeon scalar_product(const Sedeon& a, const Sedeon& b) {
  require_pure_vector(a, "scalar_product");
  require_pure_vector(b, "scalar_product");
  Sedeon out;
  for (int j = 1; j <= 3; ++j) out += scalar_column_product(a, j, b, j);
  return out;
}

Sedeon vector_product(const Sedeon& a, const Sedeon& b) {
  require_pure_vector(a, "vector_product");
  require_pure_vector(b, "vector_product");
  Sedeon out;
  // (target, p, q): component target gets i (A_p B_q - A_q B_p)
  static constexpr int kCycle[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& c : kCycle) {
    const Sedeon diff = scalar_column_product(a, c[1], b, c[2]) - scalar_column_product(a, c[2], b, c[1]);
    for (int n = 0; n < 4; ++n) {
      out[SedeonIndex(n, c[0])] = times_i_pow(diff[SedeonIndex(n, 0)], 1);
    }
  }
  return out;
}

Decomposition decompose(const Sedeon& a) noexcept {
  Decomposition d;
  for (int n = 0; n < 4; ++n) {
    d.scalar[SedeonIndex(n, 0)] = a[SedeonIndex(n, 0)];
    for (int k = 1; k < 4; ++k) d.vector[SedeonIndex(n, k)] = a[SedeonIndex(n, k)];
  }
  return d;
}

Sedeon conj_complex(const Sedeon& a) noexcept {
  Sedeon out;
  for (std::size_t i = 0; i < Sedeon::kSize; ++i) out[SedeonIndex::from_flat(i)] = std::conj(a.flat(i));
  return out;
}

Sedeon spacetime_scalar(const Sedeon& a, int k) {
  const SedeonIndex check(0, k);
  (void)check;
  Sedeon out;
  for (int n = 0; n < 4; ++n) out[SedeonIndex(n, 0)] = a[SedeonIndex(n, k)];
  return out;
}

Sedeon times_vector_unit(const Sedeon& scalar_part, int k) {
  if (!scalar_part.is_pure_scalar()) {
    throw ContractViolation("times_vector_unit: argument is not a sedeon-scalar");
  }
  Sedeon out;
  for (int n = 0; n < 4; ++n) out[SedeonIndex(n, k)] = scalar_part[SedeonIndex(n, 0)];
  return out;
}

}  // namespace sedeon
