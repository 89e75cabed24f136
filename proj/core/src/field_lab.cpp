#include "sedeon/field_lab.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "sedeon/algebra.hpp"

namespace sedeon {
namespace {

constexpr double kAnalyticTolerance = 1e-12;

double norm1(const Vec3& k) noexcept { return std::abs(k[0]) + std::abs(k[1]) + std::abs(k[2]); }

// Upper bound on the size of the operator symbol's components.
double operator_scale(double omega, const Vec3& k, const WaveOperatorParams& p) noexcept {
  return std::abs(omega) / p.c() + norm1(k) + p.mass_coeff();
}

void require_finite(const PlaneWaveField& f) {
  if (!f.amplitude.is_finite() || !std::isfinite(f.omega) || !std::isfinite(f.k[0]) || !std::isfinite(f.k[1]) ||
      !std::isfinite(f.k[2])) {
    throw DomainError("plane wave parameters must be finite");
  }
}

struct ModeResiduals {
  double second_order = 0.0;
  double first_order = 0.0;
  double dirac = 0.0;
  double scale1 = 0.0;
  double scale2 = 0.0;
};

ModeResiduals mode_residuals(const PlaneWaveField& w, const WaveOperatorParams& p) {
  const PlaneWaveField once = apply_wave_operator(w, p);
  const PlaneWaveField twice = apply_wave_operator(once, p);
  const FieldIntensities fi = field_intensities(w, p);
  const ResidualReport first = first_order_residual(fi, Sedeon::zero(), p);
  const double s = operator_scale(w.omega, w.k, p);
  ModeResiduals r;
  r.dirac = max_norm(once.amplitude);
  r.second_order = max_norm(twice.amplitude);
  r.first_order = std::max(first.entries()[0].max_residual, first.entries()[1].max_residual);
  r.scale1 = max_norm(w.amplitude) * s;
  r.scale2 = max_norm(w.amplitude) * s * s;
  return r;
}

}  // namespace

double analytic_tolerance(double scale) noexcept { return kAnalyticTolerance * std::max(1.0, scale); }

WaveOperatorParams::WaveOperatorParams(double mass_coeff, double c, ModeConvention convention)
    : mass_coeff_(mass_coeff), c_(c), convention_(convention) {
  if (!(mass_coeff >= 0.0) || !std::isfinite(mass_coeff)) throw DomainError("mass coefficient must be >= 0");
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("speed of light must be > 0");
}

WaveOperatorParams WaveOperatorParams::from_mass(double mass, double c, double hbar, ModeConvention convention) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be > 0");
  return WaveOperatorParams(mass * c / hbar, c, convention);
}

Sedeon time_derivative_symbol(double omega, const WaveOperatorParams& p) {
  Sedeon s;
  s[SedeonIndex(1, 0)] = Complex{-p.sign() * omega / p.c(), 0.0};
  return s;
}

Sedeon gradient_symbol(const Vec3& k, const WaveOperatorParams& p) {
  Sedeon s;
  for (int j = 0; j < 3; ++j) s[SedeonIndex(2, j + 1)] = Complex{0.0, -p.sign() * k[static_cast<std::size_t>(j)]};
  return s;
}

Sedeon mass_symbol(const WaveOperatorParams& p) {
  Sedeon s;
  s[SedeonIndex(3, 0)] = Complex{p.mass_coeff(), 0.0};
  return s;
}

Sedeon operator_symbol(double omega, const Vec3& k, const WaveOperatorParams& p) {
  return time_derivative_symbol(omega, p) - gradient_symbol(k, p) - kI * mass_symbol(p);
}

double klein_gordon_factor(double omega, const Vec3& k, const WaveOperatorParams& p) noexcept {
  const double mu = p.mass_coeff();
  return omega * omega / (p.c() * p.c()) - (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) - mu * mu;
}

double on_shell_omega(const Vec3& k, const WaveOperatorParams& p) noexcept {
  const double mu = p.mass_coeff();
  return p.c() * std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + mu * mu);
}

PlaneWaveField apply_wave_operator(const PlaneWaveField& f, const WaveOperatorParams& p) {
  require_finite(f);
  return {mul(operator_symbol(f.omega, f.k, p), f.amplitude), f.omega, f.k};
}

FieldIntensities field_intensities(const PlaneWaveField& w, const WaveOperatorParams& p) {
  require_finite(w);
  const Sedeon dt = time_derivative_symbol(w.omega, p);
  const Sedeon grad = gradient_symbol(w.k, p);
  const Sedeon m = mass_symbol(p);
  const auto [w0, wv] = decompose(w.amplitude);

  FieldIntensities fi;
  fi.omega = w.omega;
  fi.k = w.k;
  fi.e0 = mul(dt, w0) - scalar_product(grad, wv) - kI * mul(m, w0);
  fi.evec = mul(dt, wv) - mul(grad, w0) - kI * mul(m, wv) - vector_product(grad, wv);
  return fi;
}

ResidualReport first_order_residual(const FieldIntensities& fi, const Sedeon& source, const WaveOperatorParams& p) {
  if (!fi.e0.is_pure_scalar()) throw ContractViolation("E_0 must be a sedeon-scalar");
  if (!fi.evec.is_pure_vector()) throw ContractViolation("vec E must be a sedeon-vector");
  const Sedeon dt = time_derivative_symbol(fi.omega, p);
  const Sedeon grad = gradient_symbol(fi.k, p);
  const Sedeon m = mass_symbol(p);
  const auto [j0, jv] = decompose(source);

  const Sedeon r_scalar = mul(dt, fi.e0) - scalar_product(grad, fi.evec) - kI * mul(m, fi.e0) - j0;
  const Sedeon r_vector =
      mul(dt, fi.evec) - vector_product(grad, fi.evec) - mul(grad, fi.e0) - kI * mul(m, fi.evec) - jv;

  const double scale = std::max(max_norm(fi.e0), max_norm(fi.evec)) * operator_scale(fi.omega, fi.k, p) +
                       max_norm(source);
  ResidualReport report;
  report.add("first_order_scalar", max_norm(r_scalar), analytic_tolerance(scale));
  report.add("first_order_vector", max_norm(r_vector), analytic_tolerance(scale));
  return report;
}

ResidualReport second_order_residual(const PlaneWaveField& w, const Sedeon& source, const WaveOperatorParams& p) {
  const Sedeon d = operator_symbol(w.omega, w.k, p);
  const Sedeon e = mul(d, w.amplitude);
  const Sedeon dde = mul(d, mul(d, e));
  const Sedeon dj = mul(d, source);
  const auto [e_scalar, e_vector] = decompose(dde);
  const auto [j_scalar, j_vector] = decompose(dj);

  const double s = operator_scale(w.omega, w.k, p);
  const double amp = max_norm(w.amplitude);
  const double src = max_norm(source);

  ResidualReport report;
  report.add("second_order", max_norm(mul(d, e) - source), analytic_tolerance(amp * s * s + src));
  report.add("source_split_scalar", max_norm(e_scalar - j_scalar), analytic_tolerance(amp * s * s * s + src * s));
  report.add("source_split_vector", max_norm(e_vector - j_vector), analytic_tolerance(amp * s * s * s + src * s));
  return report;
}

ResidualReport dirac_residual(const PlaneWaveField& w, const WaveOperatorParams& p) {
  const PlaneWaveField out = apply_wave_operator(w, p);
  ResidualReport report;
  report.add("dirac", max_norm(out.amplitude),
             analytic_tolerance(max_norm(w.amplitude) * operator_scale(w.omega, w.k, p)));
  return report;
}

Matrix16 operator_matrix(double omega, const Vec3& k, const WaveOperatorParams& p) {
  return left_regular_matrix(operator_symbol(omega, k, p));
}

std::optional<Sedeon> dirac_null_amplitude(double omega, const Vec3& k, const WaveOperatorParams& p,
                                           double tolerance) {
  const Matrix16 m = operator_matrix(omega, k, p);
  if (smallest_singular_value(m) >= tolerance) return std::nullopt;
  return smallest_singular_vector(m);
}

ResidualReport superposition_residuals(std::span<const PlaneWaveField> modes, const WaveOperatorParams& p,
                                       Execution exec) {
  std::vector<ModeResiduals> per_mode(modes.size());
  if (exec == Execution::parallel && modes.size() > 1) {
    const std::size_t workers =
        std::min<std::size_t>(modes.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < modes.size(); i += workers) per_mode[i] = mode_residuals(modes[i], p);
      });
    }
  } else {
    for (std::size_t i = 0; i < modes.size(); ++i) per_mode[i] = mode_residuals(modes[i], p);
  }

  // Fixed-order reduction.
  ModeResiduals total;
  for (const auto& r : per_mode) {
    total.second_order += r.second_order;
    total.first_order += r.first_order;
    total.dirac += r.dirac;
    total.scale1 += r.scale1;
    total.scale2 += r.scale2;
  }
  ResidualReport report;
  report.add("second_order", total.second_order, analytic_tolerance(total.scale2));
  report.add("first_order", total.first_order, analytic_tolerance(total.scale2));
  report.add("dirac", total.dirac, analytic_tolerance(total.scale1));
  return report;
}

}  // namespace sedeon
