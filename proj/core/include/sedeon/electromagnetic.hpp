#pragma once

#include "sedeon/field_lab.hpp"
#include "sedeon/residual_report.hpp"
#include "sedeon/sedeon.hpp"

namespace sedeon {

/// Scalar and vector potential of one mode; the sedeonic potential is i e_t phi + e_r A.
struct EMPotential {
  Complex phi{};
  CVec3 a{};
  double omega = 0.0;
  Vec3 k{};
};

/// Charge and current density amplitudes (Gaussian units); the sedeonic source is
/// -i e_t 4 pi rho - e_r (4 pi / c) j.
struct EMSource {
  Complex rho{};
  CVec3 j{};
};

struct EMFields {
  CVec3 e{};
  CVec3 h{};
  /// (1/c) d phi/dt + (grad . A); zero in Lorentz gauge.
  Complex gauge_residual{};
};

/// E = -(1/c) dA/dt - grad phi and H = -i [grad x A], where the bracket is the
/// sedeonic external product (it carries a factor i, so H is the ordinary curl).
[[nodiscard]] EMFields em_fields(const EMPotential& pot, double c = 1.0,
                                 ModeConvention convention = ModeConvention::forward);

[[nodiscard]] Sedeon potential_sedeon(const EMPotential& pot);
[[nodiscard]] Sedeon source_sedeon(const EMSource& src, double c = 1.0);

/// e_tr E - i H: what the massless operator produces from the potential in Lorentz gauge.
[[nodiscard]] Sedeon field_sedeon(const EMFields& f);

/// e_r E - i H, the same combination with the space unit in front of E. Kept as a
/// diagnostic: it is not what the operator produces (e_t e_r = i e_tr).
[[nodiscard]] Sedeon field_sedeon_space_unit(const EMFields& f);

/// The four Maxwell residuals evaluated directly from E and H on the mode:
///   time_scalar:  (grad . E) - 4 pi rho
///   space_vector: [grad x H] - i (1/c) dE/dt - i (4 pi / c) j
///   time_vector:  [grad x E] + i (1/c) dH/dt
///   space_scalar: (grad . H)
/// Brackets are sedeonic external products.
[[nodiscard]] ResidualReport maxwell_residuals(const EMFields& f, const EMSource& src, double omega, const Vec3& k,
                                               double c = 1.0, ModeConvention convention = ModeConvention::forward);

/// The same four residuals read off the sedeon D0 (e_tr E - i H) - J, with D0 the
/// massless operator. Adds a "remainder" entry for components that belong to none
/// of the four equations.
[[nodiscard]] ResidualReport maxwell_residuals_from_operator(const EMFields& f, const EMSource& src, double omega,
                                                             const Vec3& k, double c = 1.0,
                                                             ModeConvention convention = ModeConvention::forward);

}  // namespace sedeon
