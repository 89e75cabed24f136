#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "oracle.hpp"
#include "sedeon/algebra.hpp"
#include "sedeon/field_lab.hpp"

using namespace sedeon;

namespace {

constexpr double kTol = 1e-12;

PlaneWaveField random_mode(SedeonSampler& rng) {
  return {rng.sedeon(), rng.uniform(-3, 3), {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}};
}

double entry(const ResidualReport& r, const std::string& label) { return r.at(label).max_residual; }

}  // namespace

TEST(WaveOperatorParams, Validates) {
  EXPECT_THROW(WaveOperatorParams(-1.0), DomainError);
  EXPECT_THROW(WaveOperatorParams(1.0, 0.0), DomainError);
  EXPECT_THROW(WaveOperatorParams(std::nan("")), DomainError);
  EXPECT_DOUBLE_EQ(WaveOperatorParams::from_mass(2.0, 3.0, 0.5).mass_coeff(), 12.0);
  EXPECT_THROW((void)WaveOperatorParams::from_mass(1.0, 1.0, 0.0), DomainError);
}

TEST(ApplyWaveOperator, ConstantAmplitudeKeepsOnlyMassTerm) {
  const WaveOperatorParams p(0.8);
  const PlaneWaveField out = apply_wave_operator({Sedeon::one(), 0.0, {0, 0, 0}}, p);
  EXPECT_EQ(out.amplitude, -kI * 0.8 * Sedeon::basis(3, 0));
}

TEST(ApplyWaveOperator, SymbolPieces) {
  const WaveOperatorParams p(0.5, 2.0);
  // i d_t on exp(i w t) is -w, and 1/c scales it.
  EXPECT_EQ(time_derivative_symbol(3.0, p), -1.5 * Sedeon::basis(1, 0));
  const Sedeon g = gradient_symbol({1.0, 2.0, 3.0}, p);
  for (int j = 1; j < 4; ++j) EXPECT_EQ(g(2, j), Complex(0.0, -static_cast<double>(j)));
  EXPECT_EQ(mass_symbol(p), 0.5 * Sedeon::basis(3, 0));
  const WaveOperatorParams back(0.5, 2.0, ModeConvention::backward);
  EXPECT_EQ(time_derivative_symbol(3.0, back), -time_derivative_symbol(3.0, p));
  EXPECT_EQ(gradient_symbol({1.0, 2.0, 3.0}, back), -g);
}

TEST(ApplyWaveOperator, SquareOfSymbolIsScalar) {
  // Expand the square by hand: cross terms cancel because e1 e2 + e2 e1 = 0 etc.
  const Sedeon e1 = Sedeon::basis(1, 0), e2 = Sedeon::basis(2, 0), e3 = Sedeon::basis(3, 0);
  EXPECT_EQ(mul(e1, e2) + mul(e2, e1), Sedeon::zero());
  EXPECT_EQ(mul(e1, e3) + mul(e3, e1), Sedeon::zero());
  EXPECT_EQ(mul(e2, e3) + mul(e3, e2), Sedeon::zero());
  const WaveOperatorParams p(0.5);
  const Sedeon d = operator_symbol(2.0, {1.0, 0.0, 0.0}, p);
  EXPECT_LE(max_distance(mul(d, d), 2.75 * Sedeon::one()), kTol);
  EXPECT_DOUBLE_EQ(klein_gordon_factor(2.0, {1.0, 0.0, 0.0}, p), 2.75);
}

TEST(ApplyWaveOperatorProperty, SquareEqualsKleinGordonFactor) {
  SedeonSampler rng(gen::kSeed + 40);
  for (const double omega : {-2.5, -0.7, 0.0, 1.1, 3.0})
    for (const double kmag : {0.0, 0.4, 1.0, 1.7, 2.9})
      for (const double mu : {0.0, 0.5, 1.3})
        for (const auto conv : {ModeConvention::forward, ModeConvention::backward}) {
          const WaveOperatorParams p(mu, 1.0, conv);
          const Vec3 n = rng.unit_vector();
          const PlaneWaveField w{rng.sedeon(), omega, {kmag * n[0], kmag * n[1], kmag * n[2]}};
          const Sedeon twice = apply_wave_operator(apply_wave_operator(w, p), p).amplitude;
          const double f = klein_gordon_factor(omega, w.k, p);
          EXPECT_NEAR(f, omega * omega - kmag * kmag - mu * mu, 1e-12);
          EXPECT_LE(max_distance(twice, f * w.amplitude), kTol * 16);
        }
}

TEST(ApplyWaveOperatorProperty, VanishesTwiceOnShell) {
  SedeonSampler rng(gen::kSeed + 41);
  for (int s = 0; s < 100; ++s) {
    const WaveOperatorParams p(rng.uniform(0, 2), rng.uniform(0.5, 2));
    PlaneWaveField w = random_mode(rng);
    w.omega = (s % 2 ? 1.0 : -1.0) * on_shell_omega(w.k, p);
    EXPECT_NEAR(klein_gordon_factor(w.omega, w.k, p), 0.0, 1e-12);
    EXPECT_LE(max_norm(apply_wave_operator(apply_wave_operator(w, p), p).amplitude), kTol * 16);
  }
}

TEST(ApplyWaveOperator, MatchesMatrixOracle) {
  SedeonSampler rng(gen::kSeed + 42);
  for (int s = 0; s < 20; ++s) {
    const WaveOperatorParams p(rng.uniform(0, 2));
    const PlaneWaveField w = random_mode(rng);
    const oracle::Col16 want =
        oracle::product(gen::to_col(operator_symbol(w.omega, w.k, p)), gen::to_col(w.amplitude));
    EXPECT_LE(oracle::max_abs_diff(gen::to_col(apply_wave_operator(w, p).amplitude), want), kTol * 8);
  }
}

TEST(ApplyWaveOperator, RejectsNonFinite) {
  EXPECT_THROW((void)apply_wave_operator({Sedeon::one(), INFINITY, {0, 0, 0}}, WaveOperatorParams()), DomainError);
}

TEST(FieldIntensities, Examples) {
  const WaveOperatorParams p(0.6);
  const FieldIntensities fi = field_intensities({Sedeon::one(), 0.0, {0, 0, 0}}, p);
  EXPECT_EQ(fi.e0, -kI * 0.6 * Sedeon::basis(3, 0));
  EXPECT_EQ(fi.evec, Sedeon::zero());
}

TEST(FieldIntensitiesProperty, EqualDecomposedOperatorOutput) {
  SedeonSampler rng(gen::kSeed + 43);
  for (int s = 0; s < 100; ++s) {
    const WaveOperatorParams p(rng.uniform(0, 2), 1.0, s % 2 ? ModeConvention::backward : ModeConvention::forward);
    const PlaneWaveField w = random_mode(rng);
    const FieldIntensities fi = field_intensities(w, p);
    const auto [d0, dv] = decompose(apply_wave_operator(w, p).amplitude);
    EXPECT_TRUE(fi.e0.is_pure_scalar());
    EXPECT_TRUE(fi.evec.is_pure_vector());
    EXPECT_LE(max_distance(fi.e0, d0), kTol * 8);
    EXPECT_LE(max_distance(fi.evec, dv), kTol * 8);
  }
}

TEST(FirstOrderResidual, Examples) {
  const WaveOperatorParams p(0.4);
  FieldIntensities zero;
  zero.omega = 1.2;
  zero.k = {0.3, 0, 0};
  ResidualReport r = first_order_residual(zero, Sedeon::zero(), p);
  EXPECT_EQ(entry(r, "first_order_scalar"), 0.0);
  EXPECT_EQ(entry(r, "first_order_vector"), 0.0);

  const Sedeon j = 0.25 * Sedeon::basis(1, 0) - 0.5 * kI * Sedeon::basis(2, 3);
  r = first_order_residual(zero, j, p);
  EXPECT_EQ(entry(r, "first_order_scalar"), 0.25);
  EXPECT_EQ(entry(r, "first_order_vector"), 0.5);

  FieldIntensities bad;
  bad.e0 = Sedeon::basis(0, 1);
  EXPECT_THROW((void)first_order_residual(bad, Sedeon::zero(), p), ContractViolation);
}

TEST(FirstOrderResidualProperty, SourceFreeOnShellModesPass) {
  SedeonSampler rng(gen::kSeed + 44);
  for (int s = 0; s < 100; ++s) {
    const WaveOperatorParams p(rng.uniform(0, 2));
    PlaneWaveField w = random_mode(rng);
    w.omega = on_shell_omega(w.k, p);
    const ResidualReport r = first_order_residual(field_intensities(w, p), Sedeon::zero(), p);
    EXPECT_TRUE(r.all_pass()) << entry(r, "first_order_scalar") << " " << entry(r, "first_order_vector");
  }
}

TEST(FirstOrderResidualProperty, SplitEquationsMatchOperatorOnIntensities) {
  // D(E0 + E) split by parts equals the two first-order equations with J = D(E0 + E).
  SedeonSampler rng(gen::kSeed + 45);
  for (int s = 0; s < 100; ++s) {
    const WaveOperatorParams p(rng.uniform(0, 2));
    const PlaneWaveField w = random_mode(rng);
    const FieldIntensities fi = field_intensities(w, p);
    const Sedeon j = apply_wave_operator({fi.e0 + fi.evec, w.omega, w.k}, p).amplitude;
    const ResidualReport r = first_order_residual(fi, j, p);
    EXPECT_LE(entry(r, "first_order_scalar"), kTol * 64);
    EXPECT_LE(entry(r, "first_order_vector"), kTol * 64);
  }
}

TEST(SecondOrderResidual, Examples) {
  SedeonSampler rng(gen::kSeed + 46);
  // On shell, source free.
  {
    const WaveOperatorParams p(1.0);
    const PlaneWaveField w{rng.sedeon(), std::sqrt(10.0), {3, 0, 0}};
    EXPECT_DOUBLE_EQ(on_shell_omega(w.k, p), std::sqrt(10.0));
    const ResidualReport r = second_order_residual(w, Sedeon::zero(), p);
    EXPECT_LE(entry(r, "second_order"), kTol * 16);
    EXPECT_TRUE(r.all_pass());
  }
  // Off shell: residual is |w^2 - k^2 - mu^2| times the amplitude.
  {
    const WaveOperatorParams p(0.0);
    const PlaneWaveField w{Sedeon::one(), 2.0, {1, 0, 0}};
    EXPECT_NEAR(entry(second_order_residual(w, Sedeon::zero(), p), "second_order"), 3.0, kTol);
    const PlaneWaveField r{rng.sedeon(), 2.0, {0, 1, 0}};
    EXPECT_NEAR(entry(second_order_residual(r, Sedeon::zero(), p), "second_order"), 3.0 * max_norm(r.amplitude),
                kTol * 8);
  }
  // Zero field reads off the source.
  {
    const Sedeon j = rng.sedeon();
    const ResidualReport r = second_order_residual({Sedeon::zero(), 1.0, {0.5, 0, 0}}, j, WaveOperatorParams(0.3));
    EXPECT_EQ(entry(r, "second_order"), max_norm(j));
  }
}

TEST(DiracResidual, ZeroFieldAndNullAmplitudes) {
  const WaveOperatorParams massless(0.0);
  EXPECT_EQ(entry(dirac_residual({Sedeon::zero(), 1.0, {1, 0, 0}}, massless), "dirac"), 0.0);
  SedeonSampler rng(gen::kSeed + 47);
  for (const double mu : {0.0, 1.0}) {
    const WaveOperatorParams p(mu);
    for (int s = 0; s < 10; ++s) {
      const Vec3 n = rng.unit_vector();
      const double kmag = rng.uniform(0.3, 3.0);
      const Vec3 k{kmag * n[0], kmag * n[1], kmag * n[2]};
      const double omega = on_shell_omega(k, p);
      const auto null = dirac_null_amplitude(omega, k, p);
      ASSERT_TRUE(null.has_value());
      EXPECT_TRUE(dirac_residual({*null, omega, k}, p).all_pass());
      EXPECT_FALSE(dirac_null_amplitude(omega + 0.5 * kmag + 0.1, k, p).has_value());
    }
  }
}

TEST(OperatorMatrix, SingularExactlyOnShell) {
  SedeonSampler rng(gen::kSeed + 48);
  for (const double mu : {0.0, 1.0}) {
    const WaveOperatorParams p(mu);
    for (const double kmag : {0.5, 1.0, 2.0, 3.0}) {
      const Vec3 n = rng.unit_vector();
      const Vec3 k{kmag * n[0], kmag * n[1], kmag * n[2]};
      const double shell = on_shell_omega(k, p);
      EXPECT_LT(smallest_singular_value(operator_matrix(shell, k, p)), 1e-10);
      EXPECT_LT(smallest_singular_value(operator_matrix(-shell, k, p)), 1e-10);
      for (double omega = -6.0; omega <= 6.0; omega += 0.25) {
        if (std::abs(std::abs(omega) - shell) < 0.5 * kmag) continue;
        EXPECT_GT(smallest_singular_value(operator_matrix(omega, k, p)), 0.1 * kmag) << omega << " " << kmag;
      }
    }
  }
}

TEST(Superposition, SerialAndParallelAgreeBitwise) {
  SedeonSampler rng(gen::kSeed + 49);
  std::vector<PlaneWaveField> modes;
  for (int s = 0; s < 64; ++s) modes.push_back(random_mode(rng));
  const WaveOperatorParams p(0.7);
  const ResidualReport a = superposition_residuals(modes, p, Execution::serial);
  const ResidualReport b = superposition_residuals(modes, p, Execution::parallel);
  ASSERT_EQ(a.entries().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(a.entries()[i].equation, b.entries()[i].equation);
    EXPECT_EQ(a.entries()[i].max_residual, b.entries()[i].max_residual);
  }
  EXPECT_TRUE(superposition_residuals({}, p).all_pass());
}

TEST(Superposition, OnShellNullModesPass) {
  SedeonSampler rng(gen::kSeed + 50);
  const WaveOperatorParams p(0.0);
  std::vector<PlaneWaveField> modes;
  for (int s = 0; s < 16; ++s) {
    const Vec3 n = rng.unit_vector();
    const Vec3 k{n[0], n[1], n[2]};
    modes.push_back({*dirac_null_amplitude(1.0, k, p), 1.0, k});
  }
  EXPECT_TRUE(superposition_residuals(modes, p, Execution::parallel).all_pass());
}

TEST(ResidualReport, RejectsNonFiniteAndLooksUpLabels) {
  ResidualReport r;
  r.add("x", 0.5, 1.0);
  EXPECT_THROW(r.add("y", NAN, 1.0), DomainError);
  EXPECT_TRUE(r.at("x").pass);
  EXPECT_THROW((void)r.at("missing"), DomainError);
}

TEST(AnalyticTolerance, NeverBelowFloor) {
  EXPECT_EQ(analytic_tolerance(0.0), 1e-12);
  EXPECT_EQ(analytic_tolerance(10.0), 1e-11);
}
