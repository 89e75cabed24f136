#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "generators.hpp"
#include "sedeon/algebra.hpp"
#include "sedeon/grid.hpp"

using namespace sedeon;

TEST(GridField1D, Validates) {
  std::vector<Sedeon> four(4);
  EXPECT_THROW(GridField1D(0.0, 0.1, four, 1.0), DomainError);
  std::vector<Sedeon> five(5);
  EXPECT_THROW(GridField1D(0.0, 0.0, five, 1.0), DomainError);
  EXPECT_THROW(GridField1D(0.0, -0.1, five, 1.0), DomainError);
  EXPECT_NO_THROW(GridField1D(0.0, 0.1, five, 1.0));
  const PlaneWaveField oblique{Sedeon::one(), 1.0, {1.0, 0.5, 0.0}};
  EXPECT_THROW((void)sample_mode(oblique, 0.0, 0.1, 9, WaveOperatorParams()), DomainError);
  EXPECT_THROW((void)grid_operator_at(GridField1D(0.0, 0.1, five, 1.0), 0, WaveOperatorParams()), DomainError);
}

TEST(Grid, SamplesAreTheAnalyticMode) {
  SedeonSampler rng(gen::kSeed + 70);
  const WaveOperatorParams p(0.2);
  const PlaneWaveField mode{rng.sedeon(), 1.0, {1.0, 0, 0}};
  const GridField1D g = sample_mode(mode, -0.3, 0.1, 7, p);
  const Complex phase = std::exp(Complex(0.0, -1.0 * 0.2));  // exp(-i k x) at x = 0.2
  EXPECT_LE(max_distance(g.samples()[5], phase * mode.amplitude), 1e-15);
}

TEST(Grid, ConstantFieldHasOnlyTimeAndMassTerms) {
  const WaveOperatorParams p(0.5);
  std::vector<Sedeon> samples(6, Sedeon::one());
  const GridField1D g(0.0, 0.2, samples, 2.0);
  const auto out = grid_apply_wave_operator(g, p);
  ASSERT_EQ(out.size(), 4u);
  const Sedeon want = time_derivative_symbol(2.0, p) - kI * mass_symbol(p);
  for (const auto& v : out) EXPECT_LE(max_distance(v, want), 1e-15);
}

TEST(Grid, HalvingStepQuartersTheError) {
  SedeonSampler rng(gen::kSeed + 71);
  const WaveOperatorParams p(0.0);
  const PlaneWaveField mode{rng.sedeon(), 1.0, {1.0, 0, 0}};
  const double coarse =
      grid_first_order_residual(sample_mode(mode, 0.0, 0.1, 21, p), p, mode).at("grid_vs_analytic").max_residual;
  const double fine =
      grid_first_order_residual(sample_mode(mode, 0.0, 0.05, 41, p), p, mode).at("grid_vs_analytic").max_residual;
  const double ratio = coarse / fine;
  EXPECT_GE(ratio, 3.6);
  EXPECT_LE(ratio, 4.4);
}

TEST(Grid, ErrorMatchesTaylorLeadingTerm) {
  // Central difference of exp(-i k x): derivative error is -(h^2 / 6) f''' = -(h^2/6)(i k^3) f.
  const WaveOperatorParams p(0.0);
  const double k = 1.0, h = 0.01;
  const PlaneWaveField mode{Sedeon::basis(0, 1), 0.0, {k, 0, 0}};
  const double err =
      grid_first_order_residual(sample_mode(mode, 0.0, h, 11, p), p, mode).at("grid_vs_analytic").max_residual;
  EXPECT_NEAR(err, h * h * k * k * k / 6.0, 1e-9);
}

TEST(Grid, KernelModeResidualIsPureTruncationError) {
  const WaveOperatorParams p(0.0);
  const Vec3 k{1.0, 0.0, 0.0};
  const double h = 0.001;
  const auto null = dirac_null_amplitude(1.0, k, p);
  ASSERT_TRUE(null.has_value());
  const ResidualReport r = grid_first_order_residual(sample_mode({*null, 1.0, k}, 0.0, h, 9, p), p);
  EXPECT_EQ(r.entries().front().equation, "grid_first_order");
  // Only the gradient is differenced; its leading error is (h^2 / 6) k^3 per component.
  EXPECT_LE(r.entries().front().max_residual, h * h / 6.0 * max_norm(*null) * 1.01);
}

TEST(Richardson, RemovesEvenPowerErrors) {
  // f(h) = 1 + 3 h^2 - 5 h^4: two extrapolation levels recover 1 exactly.
  auto f = [](double h) { return (1.0 + 3.0 * h * h - 5.0 * h * h * h * h) * Sedeon::one(); };
  const std::array<Sedeon, 3> values{f(0.1), f(0.05), f(0.025)};
  EXPECT_LE(max_distance(richardson_extrapolate(values), Sedeon::one()), 1e-13);
  EXPECT_THROW((void)richardson_extrapolate({}), DomainError);
}

TEST(GridConvergence, SecondOrderAndExtrapolatesToAnalytic) {
  SedeonSampler rng(gen::kSeed + 73);
  for (const double mu : {0.0, 0.5}) {
    const WaveOperatorParams p(mu);
    const PlaneWaveField mode{rng.sedeon(), 1.3, {rng.uniform(0.5, 2.0), 0, 0}};
    const std::array<double, 3> steps{0.1, 0.05, 0.025};
    const GridConvergenceStudy study = study_grid_convergence(mode, p, steps, 0.4);
    ASSERT_EQ(study.orders.size(), 2u);
    for (const double o : study.orders) EXPECT_NEAR(o, 2.0, 0.2);
    EXPECT_LE(study.extrapolation_error, 1e-8);
    EXPECT_LE(max_distance(study.analytic,
                           mul(operator_symbol(mode.omega, mode.k, p), mode_value_at(mode, 0.4, p))),
              1e-15);
  }
}
