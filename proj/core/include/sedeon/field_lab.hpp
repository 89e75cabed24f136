#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sedeon/matrix_rep.hpp"
#include "sedeon/residual_report.hpp"
#include "sedeon/sedeon.hpp"

namespace sedeon {

/// Sign of the mode phase. forward: W ~ exp(i(w t - k.r)), so d/dt -> i w and
/// grad -> -i k. backward flips both.
enum class ModeConvention { forward, backward };

[[nodiscard]] constexpr double convention_sign(ModeConvention c) noexcept {
  return c == ModeConvention::forward ? 1.0 : -1.0;
}

/// Parameters of the first-order operator (i d_t - grad_r - i m_tr).
/// mass_coeff is mc/hbar (an inverse length); hbar never appears separately.
class WaveOperatorParams {
 public:
  WaveOperatorParams() = default;
  explicit WaveOperatorParams(double mass_coeff, double c = 1.0,
                              ModeConvention convention = ModeConvention::forward);

  /// mass_coeff = m c / hbar.
  static WaveOperatorParams from_mass(double mass, double c, double hbar,
                                      ModeConvention convention = ModeConvention::forward);

  [[nodiscard]] double mass_coeff() const noexcept { return mass_coeff_; }
  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] ModeConvention convention() const noexcept { return convention_; }
  [[nodiscard]] double sign() const noexcept { return convention_sign(convention_); }

 private:
  double mass_coeff_ = 0.0;
  double c_ = 1.0;
  ModeConvention convention_ = ModeConvention::forward;
};

/// amplitude * exp(i s (omega t - k.r)), s from the operator's convention.
struct PlaneWaveField {
  Sedeon amplitude;
  double omega = 0.0;
  Vec3 k{};
};

/// E_0 (sedeon-scalar) and vec E (sedeon-vector) of one mode.
struct FieldIntensities {
  Sedeon e0;
  Sedeon evec;
  double omega = 0.0;
  Vec3 k{};
};

/// i d_t -> -(s w / c) e_1.
[[nodiscard]] Sedeon time_derivative_symbol(double omega, const WaveOperatorParams& p);
/// grad_r = e_2 (d_x a_1 + d_y a_2 + d_z a_3) -> e_2 sum_j (-i s k_j) a_j.
[[nodiscard]] Sedeon gradient_symbol(const Vec3& k, const WaveOperatorParams& p);
/// m_tr = e_3 mc/hbar.
[[nodiscard]] Sedeon mass_symbol(const WaveOperatorParams& p);
/// Symbol of the whole first-order operator on one mode.
[[nodiscard]] Sedeon operator_symbol(double omega, const Vec3& k, const WaveOperatorParams& p);

/// w^2/c^2 - |k|^2 - mu^2: the square of the first-order operator is this number times 1.
[[nodiscard]] double klein_gordon_factor(double omega, const Vec3& k, const WaveOperatorParams& p) noexcept;

/// Positive root of the dispersion relation, c sqrt(|k|^2 + mu^2).
[[nodiscard]] double on_shell_omega(const Vec3& k, const WaveOperatorParams& p) noexcept;

[[nodiscard]] PlaneWaveField apply_wave_operator(const PlaneWaveField& f, const WaveOperatorParams& p);

/// Scalar and vector intensities built term by term from the internal and
/// external products. Equals decompose(apply_wave_operator(w)).
[[nodiscard]] FieldIntensities field_intensities(const PlaneWaveField& w, const WaveOperatorParams& p);

/// Residuals of the first-order system for the intensities with source J:
///   i d_t E_0 - (grad_r . E) - i m_tr E_0 - J_0
///   i d_t E - [grad_r x E] - grad_r E_0 - i m_tr E - vec J
[[nodiscard]] ResidualReport first_order_residual(const FieldIntensities& fi, const Sedeon& source,
                                                  const WaveOperatorParams& p);

/// Residual of the second-order equation D(D W) - J, plus the scalar/vector
/// wave equations for the intensities (D^2 E_0 against the scalar part of D J,
/// D^2 E against its vector part).
[[nodiscard]] ResidualReport second_order_residual(const PlaneWaveField& w, const Sedeon& source,
                                                   const WaveOperatorParams& p);

/// Residual of the first-order (Dirac) equation D W = 0.
[[nodiscard]] ResidualReport dirac_residual(const PlaneWaveField& w, const WaveOperatorParams& p);

/// 16x16 matrix of the first-order operator on one mode.
[[nodiscard]] Matrix16 operator_matrix(double omega, const Vec3& k, const WaveOperatorParams& p);

/// A unit-norm amplitude annihilated by the operator, if its smallest singular
/// value is below tolerance.
[[nodiscard]] std::optional<Sedeon> dirac_null_amplitude(double omega, const Vec3& k, const WaveOperatorParams& p,
                                                         double tolerance = 1e-10);

enum class Execution { serial, parallel };

/// Source-free residuals of a superposition of modes. Each entry is the sum of
/// the per-mode residual magnitudes (an upper bound on the superposed residual).
/// Serial and parallel evaluation give bitwise-identical reports.
[[nodiscard]] ResidualReport superposition_residuals(std::span<const PlaneWaveField> modes,
                                                     const WaveOperatorParams& p,
                                                     Execution exec = Execution::serial);

/// Tolerance policy for analytic-mode identities: 1e-12 scaled by the
/// magnitude of the quantities involved (never below 1e-12).
[[nodiscard]] double analytic_tolerance(double scale) noexcept;

}  // namespace sedeon
