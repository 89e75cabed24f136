#pragma once

#include <array>

#include <Eigen/Core>

#include "sedeon/sedeon.hpp"

namespace sedeon {

using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;
using Vector16 = Eigen::Matrix<Complex, 16, 1>;

/// Matrix of left multiplication by e_n on the coefficient column (V0, V1, V2, V3).
[[nodiscard]] Matrix4 unit_matrix_e(int n);

/// Matrix of left multiplication by a_k on (V_0, V_1, V_2, V_3); same entries as unit_matrix_e.
[[nodiscard]] Matrix4 unit_matrix_a(int k);

/// Component column in n-major order (index n*4 + k).
[[nodiscard]] Vector16 vec(const Sedeon& v) noexcept;
[[nodiscard]] Sedeon from_vec(const Vector16& x) noexcept;

/// Component column in a-major order (index k*4 + n).
[[nodiscard]] Vector16 vec_a_major(const Sedeon& v) noexcept;

/// Left-regular representation: M(V) vec(B) = vec(V B).
/// Outer block structure follows the e-units, each block the a-unit pattern.
[[nodiscard]] Matrix16 left_regular_matrix(const Sedeon& v);

/// Same representation with the nesting swapped (a-units outer), acting on vec_a_major.
[[nodiscard]] Matrix16 left_regular_matrix_a_major(const Sedeon& v);

/// Permutation P with vec_a_major(V) = P vec(V).
[[nodiscard]] Matrix16 a_major_permutation();

/// Numerical rank of the 16 basis matrices M(e_n a_k) seen as vectors of length 256.
[[nodiscard]] int basis_matrix_rank(double tolerance = 1e-10);

/// Coordinates in the eigenbasis of a_3:
/// V = W1 (1 + a3) + W2 (a1 - i a2) + W3 (a1 + i a2) + W4 (1 - a3),
/// each W a space-time scalar (a sedeon with k = 0 content only).
struct DiracComponents {
  std::array<Sedeon, 4> w;
};

[[nodiscard]] DiracComponents dirac_project(const Sedeon& v);
[[nodiscard]] Sedeon dirac_reassemble(const DiracComponents& d);

/// The 4x4 block spin matrices sigma_1..sigma_3.
[[nodiscard]] Matrix4 sigma_matrix(int j);

/// Action of left multiplication by a_j on the (W1..W4) coordinates, measured by
/// projecting a_j * reassemble(unit W). Equals sigma_matrix(j).
[[nodiscard]] Matrix4 dirac_action_matrix(int j);

/// Smallest singular value of a 16x16 complex matrix.
[[nodiscard]] double smallest_singular_value(const Matrix16& m);

/// Right singular vector for the smallest singular value, as a sedeon.
[[nodiscard]] Sedeon smallest_singular_vector(const Matrix16& m);

}  // namespace sedeon
