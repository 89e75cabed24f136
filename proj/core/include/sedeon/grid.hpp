#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sedeon/field_lab.hpp"
#include "sedeon/residual_report.hpp"
#include "sedeon/sedeon.hpp"

namespace sedeon {

/// Time-harmonic field sampled along x: W(t, x_j) = samples[j] exp(i s w t),
/// with x_j = x0 + j h.
class GridField1D {
 public:
  /// Throws DomainError unless h > 0, omega and x0 are finite and there are at least 5 samples.
  GridField1D(double x0, double h, std::vector<Sedeon> samples, double omega);

  [[nodiscard]] double x0() const noexcept { return x0_; }
  [[nodiscard]] double h() const noexcept { return h_; }
  [[nodiscard]] double omega() const noexcept { return omega_; }
  [[nodiscard]] const std::vector<Sedeon>& samples() const noexcept { return samples_; }
  [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
  [[nodiscard]] double x(std::size_t j) const noexcept { return x0_ + static_cast<double>(j) * h_; }

  static constexpr std::size_t kMinSamples = 5;

 private:
  double x0_;
  double h_;
  std::vector<Sedeon> samples_;
  double omega_;
};

/// Sample a plane wave travelling along x. The mode's k must have zero y and z parts.
[[nodiscard]] GridField1D sample_mode(const PlaneWaveField& mode, double x0, double h, std::size_t count,
                                      const WaveOperatorParams& p);

/// The analytic mode value amplitude * exp(-i s k.r) at the point (x, 0, 0).
[[nodiscard]] Sedeon mode_value_at(const PlaneWaveField& mode, double x, const WaveOperatorParams& p);

/// (i d_t - grad_r - i m_tr) W at interior point j (1 <= j <= size-2), with d_t
/// analytic and d/dx a three-point central difference.
[[nodiscard]] Sedeon grid_operator_at(const GridField1D& g, std::size_t j, const WaveOperatorParams& p);

/// grid_operator_at for every interior point, in order.
[[nodiscard]] std::vector<Sedeon> grid_apply_wave_operator(const GridField1D& g, const WaveOperatorParams& p);

/// Max over interior points of the discrete operator output. With a reference
/// mode, the residual is measured against the analytic operator applied to it
/// ("grid_vs_analytic"); without one, against zero ("grid_first_order").
[[nodiscard]] ResidualReport grid_first_order_residual(const GridField1D& g, const WaveOperatorParams& p,
                                                       const std::optional<PlaneWaveField>& reference = std::nullopt,
                                                       double tolerance = 1e-8);

/// Richardson/Romberg extrapolation of values computed with step sizes h, h/2, h/4, ...
/// for an error expansion in even powers of h.
[[nodiscard]] Sedeon richardson_extrapolate(std::span<const Sedeon> values_by_halving);

struct GridConvergenceStudy {
  std::vector<double> steps;
  std::vector<double> errors;  // max interior error against the analytic operator
  std::vector<double> orders;  // log2(errors[i] / errors[i+1])
  Sedeon extrapolated;         // at the study point
  Sedeon analytic;             // at the study point
  double extrapolation_error = 0.0;
};

/// Sample the mode on grids centred at x_eval with each step in `steps`
/// (successively halved), measure interior errors and observed orders, and
/// Richardson-extrapolate the operator value at x_eval.
[[nodiscard]] GridConvergenceStudy study_grid_convergence(const PlaneWaveField& mode, const WaveOperatorParams& p,
                                                          std::span<const double> steps, double x_eval = 0.0,
                                                          std::size_t half_width_points = 10);

}  // namespace sedeon
