#include "sedeon/grid.hpp"

#include <algorithm>
#include <cmath>

#include "sedeon/algebra.hpp"

namespace sedeon {

GridField1D::GridField1D(double x0, double h, std::vector<Sedeon> samples, double omega)
    : x0_(x0), h_(h), samples_(std::move(samples)), omega_(omega) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("grid spacing must be > 0");
  if (!std::isfinite(x0) || !std::isfinite(omega)) throw DomainError("grid origin and frequency must be finite");
  if (samples_.size() < kMinSamples) {
    throw DomainError("grid needs at least " + std::to_string(kMinSamples) + " samples, got " +
                      std::to_string(samples_.size()));
  }
}

Sedeon mode_value_at(const PlaneWaveField& mode, double x, const WaveOperatorParams& p) {
  const Complex phase = std::exp(Complex{0.0, -p.sign() * mode.k[0] * x});
  return phase * mode.amplitude;
}

GridField1D sample_mode(const PlaneWaveField& mode, double x0, double h, std::size_t count,
                        const WaveOperatorParams& p) {
  if (mode.k[1] != 0.0 || mode.k[2] != 0.0) throw DomainError("1D grid needs a mode travelling along x");
  std::vector<Sedeon> samples;
  samples.reserve(count);
  for (std::size_t j = 0; j < count; ++j) samples.push_back(mode_value_at(mode, x0 + static_cast<double>(j) * h, p));
  return GridField1D(x0, h, std::move(samples), mode.omega);
}

Sedeon grid_operator_at(const GridField1D& g, std::size_t j, const WaveOperatorParams& p) {
  if (j == 0 || j + 1 >= g.size()) throw DomainError("grid operator needs an interior point");
  const auto& w = g.samples();
  const Sedeon dx = (1.0 / (2.0 * g.h())) * (w[j + 1] - w[j - 1]);
  // grad_r W = e_2 a_1 dW/dx
  const Sedeon e2a1 = Sedeon::basis(2, 1);
  return mul(time_derivative_symbol(g.omega(), p), w[j]) - mul(e2a1, dx) - kI * mul(mass_symbol(p), w[j]);
}

std::vector<Sedeon> grid_apply_wave_operator(const GridField1D& g, const WaveOperatorParams& p) {
  std::vector<Sedeon> out;
  out.reserve(g.size() - 2);
  for (std::size_t j = 1; j + 1 < g.size(); ++j) out.push_back(grid_operator_at(g, j, p));
  return out;
}

ResidualReport grid_first_order_residual(const GridField1D& g, const WaveOperatorParams& p,
                                         const std::optional<PlaneWaveField>& reference, double tolerance) {
  const std::vector<Sedeon> discrete = grid_apply_wave_operator(g, p);
  double worst = 0.0;
  std::optional<Sedeon> symbol;
  if (reference) symbol = operator_symbol(reference->omega, reference->k, p);
  for (std::size_t i = 0; i < discrete.size(); ++i) {
    Sedeon target;
    if (symbol) target = mul(*symbol, mode_value_at(*reference, g.x(i + 1), p));
    worst = std::max(worst, max_distance(discrete[i], target));
  }
  ResidualReport report;
  report.add(reference ? "grid_vs_analytic" : "grid_first_order", worst, tolerance);
  return report;
}

Sedeon richardson_extrapolate(std::span<const Sedeon> values) {
  if (values.empty()) throw DomainError("richardson_extrapolate needs at least one value");
  std::vector<Sedeon> row(values.begin(), values.end());
  double factor = 4.0;
  while (row.size() > 1) {
    std::vector<Sedeon> next;
    next.reserve(row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      next.push_back((factor * row[i + 1] - row[i]) * (1.0 / (factor - 1.0)));
    }
    row = std::move(next);
    factor *= 4.0;
  }
  return row.front();
}

GridConvergenceStudy study_grid_convergence(const PlaneWaveField& mode, const WaveOperatorParams& p,
                                            std::span<const double> steps, double x_eval,
                                            std::size_t half_width_points) {
  if (steps.empty()) throw DomainError("convergence study needs at least one step");
  if (half_width_points < 2) throw DomainError("convergence study needs at least 2 points per side");
  GridConvergenceStudy study;
  study.analytic = mul(operator_symbol(mode.omega, mode.k, p), mode_value_at(mode, x_eval, p));
  std::vector<Sedeon> at_point;
  for (const double h : steps) {
    const std::size_t count = 2 * half_width_points + 1;
    const GridField1D g = sample_mode(mode, x_eval - static_cast<double>(half_width_points) * h, h, count, p);
    const ResidualReport r = grid_first_order_residual(g, p, mode);
    study.steps.push_back(h);
    study.errors.push_back(r.entries().front().max_residual);
    at_point.push_back(grid_operator_at(g, half_width_points, p));
  }
  for (std::size_t i = 0; i + 1 < study.errors.size(); ++i) {
    study.orders.push_back(std::log2(study.errors[i] / study.errors[i + 1]));
  }
  study.extrapolated = richardson_extrapolate(at_point);
  study.extrapolation_error = max_distance(study.extrapolated, study.analytic);
  return study;
}

}  // namespace sedeon
