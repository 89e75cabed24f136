#include "sedeon/electromagnetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sedeon/algebra.hpp"

namespace sedeon {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

CVec3 cross(const Vec3& a, const CVec3& b) noexcept {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Complex dot(const Vec3& a, const CVec3& b) noexcept { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double max_abs(const CVec3& v) noexcept {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

double norm1(const Vec3& k) noexcept { return std::abs(k[0]) + std::abs(k[1]) + std::abs(k[2]); }

double maxwell_scale(const EMFields& f, const EMSource& src, double omega, const Vec3& k, double c) noexcept {
  return (std::abs(omega) / c + norm1(k)) * std::max(max_abs(f.e), max_abs(f.h)) +
         kFourPi * (std::abs(src.rho) + max_abs(src.j) / c);
}

void check_c(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("speed of light must be > 0");
}

}  // namespace

EMFields em_fields(const EMPotential& pot, double c, ModeConvention convention) {
  check_c(c);
  const double s = convention_sign(convention);
  const Complex dt{0.0, s * pot.omega};  // d/dt
  EMFields f;
  for (std::size_t j = 0; j < 3; ++j) {
    const Complex grad_j{0.0, -s * pot.k[j]};  // d/dx_j
    f.e[j] = -(dt / c) * pot.a[j] - grad_j * pot.phi;
  }
  // curl A with grad -> -i s k
  const CVec3 kxa = cross(pot.k, pot.a);
  for (std::size_t j = 0; j < 3; ++j) f.h[j] = Complex{0.0, -s} * kxa[j];
  f.gauge_residual = (dt / c) * pot.phi + Complex{0.0, -s} * dot(pot.k, pot.a);
  return f;
}

Sedeon potential_sedeon(const EMPotential& pot) {
  Sedeon w;
  w[SedeonIndex(1, 0)] = kI * pot.phi;
  for (int j = 0; j < 3; ++j) w[SedeonIndex(2, j + 1)] = pot.a[static_cast<std::size_t>(j)];
  return w;
}

Sedeon source_sedeon(const EMSource& src, double c) {
  check_c(c);
  Sedeon j;
  j[SedeonIndex(1, 0)] = -kI * kFourPi * src.rho;
  for (int i = 0; i < 3; ++i) j[SedeonIndex(2, i + 1)] = -(kFourPi / c) * src.j[static_cast<std::size_t>(i)];
  return j;
}

Sedeon field_sedeon(const EMFields& f) {
  Sedeon s;
  for (int j = 0; j < 3; ++j) {
    s[SedeonIndex(3, j + 1)] = f.e[static_cast<std::size_t>(j)];
    s[SedeonIndex(0, j + 1)] = -kI * f.h[static_cast<std::size_t>(j)];
  }
  return s;
}

Sedeon field_sedeon_space_unit(const EMFields& f) {
  Sedeon s;
  for (int j = 0; j < 3; ++j) {
    s[SedeonIndex(2, j + 1)] = f.e[static_cast<std::size_t>(j)];
    s[SedeonIndex(0, j + 1)] = -kI * f.h[static_cast<std::size_t>(j)];
  }
  return s;
}

ResidualReport maxwell_residuals(const EMFields& f, const EMSource& src, double omega, const Vec3& k, double c,
                                 ModeConvention convention) {
  check_c(c);
  const double s = convention_sign(convention);
  const Complex dt{0.0, s * omega};
  // [grad x X] = i (grad x X)_ordinary = i (-i s) k x X = s k x X
  const CVec3 curl_e = cross(k, f.e);
  const CVec3 curl_h = cross(k, f.h);
  const Complex div_e = Complex{0.0, -s} * dot(k, f.e);
  const Complex div_h = Complex{0.0, -s} * dot(k, f.h);

  double r_space_vector = 0.0;
  double r_time_vector = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    const Complex amp = s * curl_h[j] - kI * (dt / c) * f.e[j] - kI * (kFourPi / c) * src.j[j];
    const Complex far = s * curl_e[j] + kI * (dt / c) * f.h[j];
    r_space_vector = std::max(r_space_vector, std::abs(amp));
    r_time_vector = std::max(r_time_vector, std::abs(far));
  }

  const double tol = analytic_tolerance(maxwell_scale(f, src, omega, k, c));
  ResidualReport report;
  report.add("time_scalar", std::abs(div_e - kFourPi * src.rho), tol);
  report.add("space_vector", r_space_vector, tol);
  report.add("time_vector", r_time_vector, tol);
  report.add("space_scalar", std::abs(div_h), tol);
  return report;
}

ResidualReport maxwell_residuals_from_operator(const EMFields& f, const EMSource& src, double omega, const Vec3& k,
                                               double c, ModeConvention convention) {
  const WaveOperatorParams massless(0.0, c, convention);
  const Sedeon r = mul(operator_symbol(omega, k, massless), field_sedeon(f)) - source_sedeon(src, c);

  // D0 (e_tr E - iH) - J =  -i e_t[(grad.E) - 4 pi rho] - i e_t[[grad x E] + i(1/c) dH/dt]
  //                       + i e_r[[grad x H] - i(1/c) dE/dt - i(4 pi/c) j] + i e_r (grad.H)
  double space_vector = 0.0;
  double time_vector = 0.0;
  double remainder = std::max(std::abs(r(0, 0)), std::abs(r(3, 0)));
  for (int j = 1; j < 4; ++j) {
    time_vector = std::max(time_vector, std::abs(kI * r(1, j)));
    space_vector = std::max(space_vector, std::abs(-kI * r(2, j)));
    remainder = std::max({remainder, std::abs(r(0, j)), std::abs(r(3, j))});
  }

  const double tol = analytic_tolerance(maxwell_scale(f, src, omega, k, c));
  ResidualReport report;
  report.add("time_scalar", std::abs(kI * r(1, 0)), tol);
  report.add("space_vector", space_vector, tol);
  report.add("time_vector", time_vector, tol);
  report.add("space_scalar", std::abs(-kI * r(2, 0)), tol);
  report.add("remainder", remainder, tol);
  return report;
}

}  // namespace sedeon
