#pragma once

#include "sedeon/sedeon.hpp"
#include "sedeon/structure_table.hpp"

namespace sedeon {

/// The scalar part V_0 (all k = 0 components) and the vector part (k = 1..3).
struct Decomposition {
  Sedeon scalar;
  Sedeon vector;
};

[[nodiscard]] Sedeon basis_element(int n, int k);

/// c1*A + c2*B, componentwise.
[[nodiscard]] Sedeon linear_combine(Complex c1, const Sedeon& a, Complex c2, const Sedeon& b) noexcept;

/// Full noncommutative, associative sedeon product.
[[nodiscard]] Sedeon mul(const Sedeon& a, const Sedeon& b) noexcept;

/// Internal product (A . B) = A_1 B_1 + A_2 B_2 + A_3 B_3 of two sedeon-vectors.
/// Each A_j B_j multiplies space-time scalars, so the result is a sedeon-scalar.
/// Throws ContractViolation if either argument has a nonzero k = 0 component.
[[nodiscard]] Sedeon scalar_product(const Sedeon& a, const Sedeon& b);

/// External product [A x B] = i(A_2 B_3 - A_3 B_2) a_1 + i(A_3 B_1 - A_1 B_3) a_2
/// + i(A_1 B_2 - A_2 B_1) a_3. Same precondition as scalar_product.
[[nodiscard]] Sedeon vector_product(const Sedeon& a, const Sedeon& b);

[[nodiscard]] Decomposition decompose(const Sedeon& a) noexcept;

/// Complex conjugate of every component; the basis units are untouched.
[[nodiscard]] Sedeon conj_complex(const Sedeon& a) noexcept;

/// Space-time scalar V_k = V_0k + e1 V_1k + e2 V_2k + e3 V_3k, returned as a
/// sedeon with only k = 0 components.
[[nodiscard]] Sedeon spacetime_scalar(const Sedeon& a, int k);

/// Inverse of spacetime_scalar: place a sedeon-scalar's content on vector unit a_k.
[[nodiscard]] Sedeon times_vector_unit(const Sedeon& scalar_part, int k);

}  // namespace sedeon
