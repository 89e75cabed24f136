#include "sedeon_cli/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sedeon/algebra.hpp"
#include "sedeon/electromagnetic.hpp"
#include "sedeon/field_lab.hpp"
#include "sedeon/grid.hpp"
#include "sedeon/json.hpp"
#include "sedeon/matrix_rep.hpp"
#include "sedeon/random.hpp"
#include "sedeon/transforms.hpp"

namespace sedeon::cli {
namespace {

constexpr double kAnalytic = 1e-12;
constexpr double kExact = 0.0;

// Seed offsets keep each suite's samples independent of which other suites run.
constexpr std::uint64_t kAlgebraStream = 0x1001;
constexpr std::uint64_t kTransformStream = 0x2002;
constexpr std::uint64_t kRepresentationStream = 0x3003;
constexpr std::uint64_t kFieldStream = 0x4004;

// The printed unit table, identical for e and a: row p, column q (1-based units).
struct PrintedEntry {
  Complex coefficient;
  int unit;
};
const PrintedEntry kPrintedTable[3][3] = {
    {{{1.0, 0.0}, 0}, {{0.0, 1.0}, 3}, {{0.0, -1.0}, 2}},
    {{{0.0, -1.0}, 3}, {{1.0, 0.0}, 0}, {{0.0, 1.0}, 1}},
    {{{0.0, 1.0}, 2}, {{0.0, -1.0}, 1}, {{1.0, 0.0}, 0}},
};

struct Generator {
  std::string name;
  int n;
  int k;
};

const std::array<Generator, 6> kGenerators = {{
    {"e1", 1, 0}, {"e2", 2, 0}, {"e3", 3, 0}, {"a1", 0, 1}, {"a2", 0, 2}, {"a3", 0, 3},
}};

// Expected product of two generators from the printed table and the rule that
// e-units commute with a-units.
Sedeon printed_product(const Generator& l, const Generator& r) {
  const bool l_is_e = l.n != 0;
  const bool r_is_e = r.n != 0;
  if (l_is_e != r_is_e) return Sedeon::basis(l.n + r.n, l.k + r.k);
  const int p = l_is_e ? l.n : l.k;
  const int q = l_is_e ? r.n : r.k;
  const PrintedEntry& e = kPrintedTable[p - 1][q - 1];
  return e.coefficient * (l_is_e ? Sedeon::basis(e.unit, 0) : Sedeon::basis(0, e.unit));
}

double relative(double deviation, double scale) { return deviation / std::max(1.0, scale); }

class Collector {
 public:
  explicit Collector(std::string suite, std::vector<Check>& out) : suite_(std::move(suite)), out_(out) {}

  void upper(std::string name, double measured, double tolerance) {
    out_.push_back({suite_, std::move(name), measured, tolerance, false, measured <= tolerance});
  }
  void lower(std::string name, double measured, double bound) {
    out_.push_back({suite_, std::move(name), measured, bound, true, measured > bound});
  }

 private:
  std::string suite_;
  std::vector<Check>& out_;
};

Sedeon random_absolute_vector(SedeonSampler& rng) {
  Sedeon v;
  for (int k = 1; k < 4; ++k) v(0, k) = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return v;
}

// ---------------------------------------------------------------- tables

void tables_suite(SuiteResult& result) {
  Collector c("tables", result.checks);
  result.products = generator_products(0);
  for (const auto& lhs : kGenerators) {
    for (const auto& rhs : kGenerators) {
      const Sedeon got = mul(Sedeon::basis(lhs.n, lhs.k), Sedeon::basis(rhs.n, rhs.k));
      c.upper(lhs.name + "*" + rhs.name, max_distance(got, printed_product(lhs, rhs)), kExact);
    }
  }
}

// ---------------------------------------------------------------- algebra

void algebra_suite(const SuiteConfig& cfg, SuiteResult& result) {
  Collector c("algebra", result.checks);
  SedeonSampler rng(cfg.seed ^ kAlgebraStream);
  const std::size_t n = cfg.sample_count;

  double assoc = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const Sedeon a = rng.unit_modulus_sedeon();
    const Sedeon b = rng.unit_modulus_sedeon();
    const Sedeon d = rng.unit_modulus_sedeon();
    const double scale = max_norm(a) * max_norm(b) * max_norm(d);
    assoc = std::max(assoc, max_distance(mul(mul(a, b), d), mul(a, mul(b, d))) / scale);
  }
  c.upper("associativity", assoc, kAnalytic);

  double table = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    const Sedeon lhs = Sedeon::basis(SedeonIndex::from_flat(i));
    const Matrix16 m = left_regular_matrix(lhs);
    for (std::size_t j = 0; j < 16; ++j) {
      const Sedeon rhs = Sedeon::basis(SedeonIndex::from_flat(j));
      table = std::max(table, max_distance(mul(lhs, rhs), from_vec(m * vec(rhs))));
    }
  }
  c.upper("basis_table_vs_matrix_rep", table, kExact);

  const Sedeon a1 = Sedeon::basis(0, 1);
  const Sedeon a2 = Sedeon::basis(0, 2);
  const Sedeon a3 = Sedeon::basis(0, 3);
  c.upper("noncommutativity_witness",
          std::max(max_distance(mul(a1, a2), kI * a3), max_distance(mul(a2, a1), -kI * a3)), kExact);

  auto decomposed_product = [](const Sedeon& a, const Sedeon& b) {
    const auto [a0, av] = decompose(a);
    const auto [b0, bv] = decompose(b);
    return mul(a0, b0) + mul(a0, bv) + mul(av, b0) + scalar_product(av, bv) + vector_product(av, bv);
  };
  double decomp_basis = 0.0;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const Sedeon a = Sedeon::basis(SedeonIndex::from_flat(i));
      const Sedeon b = Sedeon::basis(SedeonIndex::from_flat(j));
      decomp_basis = std::max(decomp_basis, max_distance(mul(a, b), decomposed_product(a, b)));
    }
  c.upper("product_decomposition_basis", decomp_basis, kExact);
  double decomp_random = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const Sedeon a = rng.sedeon();
    const Sedeon b = rng.sedeon();
    decomp_random = std::max(decomp_random, relative(max_distance(mul(a, b), decomposed_product(a, b)),
                                                     max_norm(a) * max_norm(b)));
  }
  c.upper("product_decomposition_random", decomp_random, kAnalytic);

  auto triple_deviation = [](const Sedeon& a, const Sedeon& b, const Sedeon& d) {
    const Sedeon lhs = vector_product(a, vector_product(b, d));
    const Sedeon rhs = mul(d, scalar_product(a, b)) - mul(b, scalar_product(a, d));
    return max_distance(lhs, rhs);
  };
  double triple_basis = 0.0;
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      for (int k = 1; k < 4; ++k)
        triple_basis = std::max(triple_basis, triple_deviation(Sedeon::basis(0, i), Sedeon::basis(0, j),
                                                               Sedeon::basis(0, k)));
  c.upper("triple_product_basis", triple_basis, kExact);
  double triple_random = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const Sedeon a = random_absolute_vector(rng);
    const Sedeon b = random_absolute_vector(rng);
    const Sedeon d = random_absolute_vector(rng);
    triple_random = std::max(triple_random, relative(triple_deviation(a, b, d), max_norm(a) * max_norm(b) * max_norm(d)));
  }
  c.upper("triple_product_random", triple_random, kAnalytic);

  double bilinear = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const Sedeon a = rng.sedeon();
    const Sedeon b = rng.sedeon();
    const Sedeon d = rng.sedeon();
    const Complex x{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const Complex y{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double scale = max_norm(d) * std::max(max_norm(a), max_norm(b));
    const Sedeon left = mul(linear_combine(x, a, y, b), d);
    const Sedeon left_expected = linear_combine(x, mul(a, d), y, mul(b, d));
    const Sedeon right = mul(d, linear_combine(x, a, y, b));
    const Sedeon right_expected = linear_combine(x, mul(d, a), y, mul(d, b));
    bilinear = std::max({bilinear, relative(max_distance(left, left_expected), scale),
                         relative(max_distance(right, right_expected), scale)});
  }
  c.upper("bilinearity", bilinear, kAnalytic);
}

// ---------------------------------------------------------------- transforms

void transforms_suite(const SuiteConfig& cfg, SuiteResult& result) {
  Collector c("transforms", result.checks);
  SedeonSampler rng(cfg.seed ^ kTransformStream);
  const std::size_t n = cfg.sample_count;
  const Sedeon one = Sedeon::one();

  double unitarity = 0.0;
  double closed = 0.0;
  double scalar_kept = 0.0;
  double composition = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const Rotor r(rng.uniform(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi), rng.unit_vector());
    const auto [u, u_conj] = rotor_sedeon(r);
    unitarity = std::max({unitarity, max_distance(mul(u_conj, u), one), max_distance(mul(u, u_conj), one)});
    const Sedeon v = rng.sedeon();
    const Sedeon rotated = rotate(v, r);
    const double scale = max_norm(v);
    closed = std::max(closed, relative(max_distance(rotated, rotate_closed_form(v, r)), scale));
    for (int m = 0; m < 4; ++m)
      scalar_kept = std::max(scalar_kept, relative(std::abs(rotated(m, 0) - v(m, 0)), scale));
    const double second = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const Sedeon twice = rotate(rotated, Rotor(second, r.axis()));
    const Sedeon once = rotate(v, Rotor(r.theta() + second, r.axis()));
    composition = std::max(composition, relative(max_distance(twice, once), scale));
  }
  c.upper("rotor_unitarity", unitarity, kAnalytic);
  c.upper("rotation_closed_form", closed, kAnalytic);
  c.upper("rotation_scalar_part_invariant", scalar_kept, kAnalytic);
  c.upper("rotation_composition", composition, kAnalytic);
  c.upper("rotate_a1_quarter_turn_about_a3",
          max_distance(rotate(Sedeon::basis(0, 1), Rotor(std::numbers::pi / 2.0, {0.0, 0.0, 1.0})),
                       Sedeon::basis(0, 2)),
          kAnalytic);

  for (const Inversion mode : {Inversion::time, Inversion::space, Inversion::spacetime}) {
    double pattern = 0.0;
    double involution = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
      const Sedeon b = Sedeon::basis(SedeonIndex::from_flat(i));
      pattern = std::max(pattern, max_distance(invert(b, mode), invert_sign_pattern(b, mode)));
      involution = std::max(involution, max_distance(invert(invert(b, mode), mode), b));
    }
    for (std::size_t s = 0; s < n; ++s) {
      const Sedeon v = rng.sedeon();
      involution = std::max(involution, max_distance(invert(invert(v, mode), mode), v));
    }
    c.upper(std::string("inversion_pattern_") + to_string(mode), pattern, kExact);
    c.upper(std::string("inversion_involution_") + to_string(mode), involution, kExact);
  }

  double normalization = 0.0;
  double interval_drift = 0.0;
  std::vector<Sedeon> audit_samples;
  std::vector<Boost> audit_boosts;
  for (std::size_t s = 0; s < n; ++s) {
    const Boost b = Boost::from_velocity(rng.uniform(-0.95, 0.95), rng.unit_vector());
    const auto [l, l_conj] = boost_sedeon(b);
    normalization = std::max({normalization, max_distance(mul(l_conj, l), one), max_distance(mul(l, l_conj), one)});
    const EventVector ev{rng.uniform(-2.0, 2.0), {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}};
    const Sedeon ev_s = event_sedeon(ev);
    const Complex before = interval(ev_s);
    const Complex after = interval(lorentz_transform(ev_s, b));
    const double scale = ev.t * ev.t + ev.r[0] * ev.r[0] + ev.r[1] * ev.r[1] + ev.r[2] * ev.r[2];
    interval_drift = std::max(interval_drift, relative(std::abs(after - before), scale));
    audit_samples.push_back(rng.sedeon());
    audit_boosts.push_back(b);
  }
  c.upper("boost_normalization", normalization, kAnalytic);
  c.upper("interval_invariance", interval_drift, kAnalytic);

  double standard = 0.0;
  const std::array<Vec3, 3> axes = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
  for (const double beta : {0.0, 0.2, -0.2, 0.6, -0.6, 0.9, -0.9}) {
    for (const auto& axis : axes) {
      for (std::size_t s = 0; s < std::max<std::size_t>(1, n / 10); ++s) {
        const EventVector ev{rng.uniform(-2.0, 2.0), {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}};
        const Boost b = Boost::from_velocity(beta, axis);
        const BoostedEvent got = boost_event(ev, b);
        const BoostedEvent want = boost_event_standard(ev, b);
        const double scale = std::max({std::abs(want.t), std::abs(want.r[0]), std::abs(want.r[1]), std::abs(want.r[2])});
        double dev = std::abs(got.t - want.t);
        for (std::size_t j = 0; j < 3; ++j) dev = std::max(dev, std::abs(got.r[j] - want.r[j]));
        standard = std::max(standard, relative(dev, scale));
      }
    }
  }
  c.upper("boost_event_vs_standard", standard, kAnalytic);
  const BoostedEvent example = boost_event({1.0, {1.0, 0.0, 0.0}}, Boost::from_velocity(0.6, {1.0, 0.0, 0.0}));
  c.upper("boost_event_example", std::max(std::abs(example.t - 0.5), std::abs(example.r[0] - 0.5)), kAnalytic);

  result.lorentz_audit = audit_lorentz_closed_form(audit_samples, audit_boosts, kAnalytic);
}

// ---------------------------------------------------------------- representation

template <typename A, typename B>
double matrix_distance(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void representation_suite(const SuiteConfig& cfg, SuiteResult& result) {
  Collector c("representation", result.checks);
  SedeonSampler rng(cfg.seed ^ kRepresentationStream);
  const std::size_t n = cfg.sample_count;

  double homomorphism = 0.0;
  double action = 0.0;
  double similarity = 0.0;
  double round_trip = 0.0;
  const Matrix16 perm = a_major_permutation();
  for (std::size_t s = 0; s < n; ++s) {
    const Sedeon a = rng.sedeon();
    const Sedeon b = rng.sedeon();
    const Sedeon ab = mul(a, b);
    const double scale = max_norm(a) * max_norm(b);
    const Matrix16 ma = left_regular_matrix(a);
    homomorphism = std::max(homomorphism,
                            relative(matrix_distance(left_regular_matrix(ab), ma * left_regular_matrix(b)), scale));
    action = std::max(action, relative(max_distance(from_vec(ma * vec(b)), ab), scale));
    similarity = std::max(similarity, relative(matrix_distance(perm * ma * perm.transpose(),
                                                               left_regular_matrix_a_major(a)),
                                               max_norm(a)));
    round_trip = std::max(round_trip, relative(max_distance(dirac_reassemble(dirac_project(a)), a), max_norm(a)));
  }
  c.upper("homomorphism", homomorphism, kAnalytic);
  c.upper("action", action, kAnalytic);
  c.upper("a_major_similarity", similarity, kAnalytic);
  c.upper("dirac_round_trip", round_trip, kAnalytic);
  c.upper("basis_rank_deficit", 16.0 - basis_matrix_rank(), kExact);

  double e_table = 0.0;
  double a_table = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      const UnitProduct u = unit_product(p, q);
      e_table = std::max(e_table, matrix_distance(unit_matrix_e(p) * unit_matrix_e(q),
                                                  u.coefficient() * unit_matrix_e(u.index)));
      a_table = std::max(a_table, matrix_distance(unit_matrix_a(p) * unit_matrix_a(q),
                                                  u.coefficient() * unit_matrix_a(u.index)));
    }
  c.upper("unit_matrices_e_table", e_table, kExact);
  c.upper("unit_matrices_a_table", a_table, kExact);

  double hermitian = 0.0;
  double involutory = 0.0;
  double action_match = 0.0;
  for (int j = 1; j < 4; ++j) {
    const Matrix4 sj = sigma_matrix(j);
    hermitian = std::max(hermitian, matrix_distance(sj, sj.adjoint()));
    involutory = std::max(involutory, matrix_distance(sj * sj, Matrix4::Identity()));
    action_match = std::max(action_match, matrix_distance(dirac_action_matrix(j), sj));
  }
  c.upper("sigma_hermitian", hermitian, kExact);
  c.upper("sigma_square_identity", involutory, kExact);
  c.upper("sigma_product", matrix_distance(sigma_matrix(1) * sigma_matrix(2), kI * sigma_matrix(3)), kExact);
  c.upper("sigma_matches_a_action", action_match, kAnalytic);
}

// ---------------------------------------------------------------- field

void field_suite(const SuiteConfig& cfg, SuiteResult& result) {
  Collector c("field", result.checks);
  SedeonSampler rng(cfg.seed ^ kFieldStream);
  const std::size_t n = cfg.sample_count;

  // 5 x 5 x 3 grid of (omega, |k|, mu), each with a random amplitude and direction.
  double kg = 0.0;
  double on_shell = 0.0;
  for (const double omega : {-2.5, -0.7, 0.0, 1.1, 3.0}) {
    for (const double kmag : {0.0, 0.4, 1.0, 1.7, 2.9}) {
      for (const double mu : {0.0, 0.5, 1.3}) {
        const WaveOperatorParams p(mu);
        const Vec3 dir = rng.unit_vector();
        const Vec3 k{kmag * dir[0], kmag * dir[1], kmag * dir[2]};
        const PlaneWaveField w{rng.sedeon(), omega, k};
        const Sedeon twice = apply_wave_operator(apply_wave_operator(w, p), p).amplitude;
        const double f = klein_gordon_factor(omega, k, p);
        const double scale = max_norm(w.amplitude) * (omega * omega + kmag * kmag + mu * mu);
        kg = std::max(kg, relative(max_distance(twice, f * w.amplitude), scale));
        const PlaneWaveField shell{w.amplitude, on_shell_omega(k, p), k};
        on_shell = std::max(on_shell, std::abs(klein_gordon_factor(shell.omega, k, p)));
      }
    }
  }
  c.upper("klein_gordon_factorization", kg, kAnalytic);
  c.upper("klein_gordon_on_shell_factor", on_shell, kAnalytic);

  double intensities = 0.0;
  double first_order = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const WaveOperatorParams p(rng.uniform(0.0, 2.0), 1.0,
                               s % 2 == 0 ? ModeConvention::forward : ModeConvention::backward);
    const PlaneWaveField w{rng.sedeon(), rng.uniform(-3.0, 3.0),
                           {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}};
    const FieldIntensities fi = field_intensities(w, p);
    const auto [d0, dv] = decompose(apply_wave_operator(w, p).amplitude);
    const double scale = max_norm(w.amplitude) * 8.0;
    intensities = std::max({intensities, relative(max_distance(fi.e0, d0), scale),
                            relative(max_distance(fi.evec, dv), scale)});
    // Applying the operator to E0 + E and splitting must reproduce the two first-order equations.
    const Sedeon source = apply_wave_operator({fi.e0 + fi.evec, w.omega, w.k}, p).amplitude;
    const ResidualReport r = first_order_residual(fi, source, p);
    for (const auto& e : r.entries()) first_order = std::max(first_order, relative(e.max_residual, scale * 8.0));
  }
  c.upper("intensities_match_operator", intensities, kAnalytic);
  c.upper("first_order_split_equivalence", first_order, kAnalytic);

  // Maxwell limit on the transverse vacuum mode.
  {
    const double kx = 1.3;
    const double a0 = 0.7;
    const EMPotential pot{{}, {Complex{}, Complex{a0, 0.0}, Complex{}}, kx, {kx, 0.0, 0.0}};
    const EMFields f = em_fields(pot);
    const ResidualReport direct = maxwell_residuals(f, {}, pot.omega, pot.k);
    double worst = std::abs(f.gauge_residual);
    for (const auto& e : direct.entries()) worst = std::max(worst, e.max_residual);
    c.upper("maxwell_vacuum_mode", worst, kAnalytic);
    const Sedeon d0 = operator_symbol(pot.omega, pot.k, WaveOperatorParams(0.0));
    c.upper("maxwell_field_identity", max_distance(mul(d0, potential_sedeon(pot)), field_sedeon(f)), kAnalytic);
  }
  double em_identity = 0.0;
  double em_agreement = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const double cl = rng.uniform(0.5, 2.0);
    const Vec3 k{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const double omega = rng.uniform(0.5, 3.0) * (s % 2 == 0 ? 1.0 : -1.0);
    EMPotential pot{{}, {}, omega, k};
    for (auto& a : pot.a) a = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    // Lorentz gauge: (omega / c) phi = k . A.
    pot.phi = (cl / omega) * (k[0] * pot.a[0] + k[1] * pot.a[1] + k[2] * pot.a[2]);
    const EMFields f = em_fields(pot, cl);
    const double scale = (std::abs(omega) / cl + 6.0) * (std::abs(pot.phi) + 3.0);
    const Sedeon d0 = operator_symbol(omega, k, WaveOperatorParams(0.0, cl));
    em_identity = std::max(em_identity, relative(max_distance(mul(d0, potential_sedeon(pot)), field_sedeon(f)), scale));
    const EMSource src{Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)},
                       {Complex{rng.uniform(-1.0, 1.0), 0.0}, Complex{0.0, rng.uniform(-1.0, 1.0)}, Complex{}}};
    const ResidualReport direct = maxwell_residuals(f, src, omega, k, cl);
    const ResidualReport via_op = maxwell_residuals_from_operator(f, src, omega, k, cl);
    for (const auto& e : direct.entries())
      em_agreement = std::max(em_agreement, relative(std::abs(e.max_residual - via_op.at(e.equation).max_residual),
                                                     scale * 20.0));
    em_agreement = std::max(em_agreement, relative(via_op.at("remainder").max_residual, scale * 20.0));
  }
  c.upper("maxwell_field_identity_random", em_identity, kAnalytic);
  c.upper("maxwell_operator_vs_direct", em_agreement, kAnalytic);

  // Single-factor operator kernel.
  double on_shell_sigma = 0.0;
  double off_shell_ratio = std::numeric_limits<double>::infinity();
  for (const double mu : {0.0, 1.0}) {
    const WaveOperatorParams p(mu);
    for (const double kmag : {0.5, 1.0, 2.0, 3.0}) {
      const Vec3 dir = rng.unit_vector();
      const Vec3 k{kmag * dir[0], kmag * dir[1], kmag * dir[2]};
      const double shell = on_shell_omega(k, p);
      for (const double omega : {shell, -shell})
        on_shell_sigma = std::max(on_shell_sigma, smallest_singular_value(operator_matrix(omega, k, p)));
      for (int i = 0; i <= 48; ++i) {
        const double omega = -6.0 + 0.25 * i;
        if (std::abs(std::abs(omega) - shell) < 0.5 * kmag) continue;
        off_shell_ratio = std::min(off_shell_ratio, smallest_singular_value(operator_matrix(omega, k, p)) / kmag);
      }
    }
  }
  c.upper("dirac_kernel_on_shell", on_shell_sigma, 1e-10);
  c.lower("dirac_kernel_off_shell", off_shell_ratio, 0.1);
  {
    const WaveOperatorParams p(0.0);
    const Vec3 k{0.0, 0.6, 0.8};
    const auto null = dirac_null_amplitude(1.0, k, p);
    c.upper("dirac_null_amplitude", null ? dirac_residual({*null, 1.0, k}, p).entries().front().max_residual : 1.0,
            kAnalytic);
  }

  // Central-difference grid.
  {
    const WaveOperatorParams p(0.5);
    const PlaneWaveField mode{rng.sedeon(), 1.3, {0.8, 0.0, 0.0}};
    const std::array<double, 3> steps{0.1, 0.05, 0.025};
    const GridConvergenceStudy study = study_grid_convergence(mode, p, steps);
    double order_dev = 0.0;
    for (const double o : study.orders) order_dev = std::max(order_dev, std::abs(o - 2.0));
    c.upper("grid_order_deviation", order_dev, 0.2);
    c.upper("grid_richardson", study.extrapolation_error, 1e-8);
  }

  // Superposition: serial and parallel reductions agree bit for bit.
  {
    const WaveOperatorParams p(0.0);
    std::vector<PlaneWaveField> modes;
    for (std::size_t s = 0; s < std::max<std::size_t>(2, n / 4); ++s) {
      const Vec3 dir = rng.unit_vector();
      const double kmag = rng.uniform(0.2, 2.0);
      const Vec3 k{kmag * dir[0], kmag * dir[1], kmag * dir[2]};
      const auto null = dirac_null_amplitude(on_shell_omega(k, p), k, p);
      if (null) modes.push_back({*null, on_shell_omega(k, p), k});
    }
    const ResidualReport serial = superposition_residuals(modes, p, Execution::serial);
    const ResidualReport parallel = superposition_residuals(modes, p, Execution::parallel);
    double worst = 0.0;
    double mismatch = 0.0;
    for (std::size_t i = 0; i < serial.entries().size(); ++i) {
      worst = std::max(worst, serial.entries()[i].max_residual / serial.entries()[i].tolerance);
      if (serial.entries()[i].max_residual != parallel.entries()[i].max_residual) mismatch = 1.0;
    }
    // Residual as a fraction of its own tolerance.
    c.upper("superposition_null_modes", worst, 1.0);
    c.upper("superposition_parallel_determinism", mismatch, kExact);
  }
}

std::string format_number(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "tables") return Suite::tables;
  if (name == "algebra") return Suite::algebra;
  if (name == "transforms") return Suite::transforms;
  if (name == "representation") return Suite::representation;
  if (name == "field") return Suite::field;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::tables: return "tables";
    case Suite::algebra: return "algebra";
    case Suite::transforms: return "transforms";
    case Suite::representation: return "representation";
    case Suite::field: return "field";
    case Suite::all: return "all";
  }
  return "unknown";
}

bool SuiteResult::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }) &&
         std::all_of(products.begin(), products.end(), [](const GeneratorProduct& p) { return p.matches_table; });
}

std::pair<Complex, std::string> monomial(const Sedeon& s) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < Sedeon::kSize; ++i) {
    if (s.flat(i) == Complex{}) continue;
    if (found) throw ContractViolation("not a single-term sedeon: " + to_string(s));
    found = i;
  }
  if (!found) return {Complex{}, "0"};
  const SedeonIndex idx = SedeonIndex::from_flat(*found);
  std::string name;
  if (idx.n() == 0 && idx.k() == 0) name = "1";
  if (idx.n() != 0) name += "e" + std::to_string(idx.n());
  if (idx.k() != 0) name += "a" + std::to_string(idx.k());
  return {s.flat(*found), name};
}

std::vector<GeneratorProduct> generator_products(char basis) {
  std::vector<GeneratorProduct> out;
  for (const auto& l : kGenerators) {
    for (const auto& r : kGenerators) {
      const bool l_is_e = l.n != 0;
      const bool r_is_e = r.n != 0;
      if (basis == 'e' && !(l_is_e && r_is_e)) continue;
      if (basis == 'a' && (l_is_e || r_is_e)) continue;
      const Sedeon got = mul(Sedeon::basis(l.n, l.k), Sedeon::basis(r.n, r.k));
      const auto [coef, unit] = monomial(got);
      out.push_back({l.name, r.name, coef, unit, got == printed_product(l, r)});
    }
  }
  return out;
}

SuiteResult evaluate_suite(const SuiteConfig& cfg) {
  if (cfg.sample_count < 1) throw DomainError("sample_count must be >= 1");
  SuiteResult result;
  const bool all = cfg.suite == Suite::all;
  if (all || cfg.suite == Suite::tables) tables_suite(result);
  if (all || cfg.suite == Suite::algebra) algebra_suite(cfg, result);
  if (all || cfg.suite == Suite::transforms) transforms_suite(cfg, result);
  if (all || cfg.suite == Suite::representation) representation_suite(cfg, result);
  if (all || cfg.suite == Suite::field) field_suite(cfg, result);
  return result;
}

void write_suite_result(const SuiteConfig& cfg, const SuiteResult& result, std::ostream& out) {
  switch (cfg.format) {
    case OutputFormat::json: {
      nlohmann::json j;
      j["suite"] = to_string(cfg.suite);
      j["seed"] = cfg.seed;
      j["samples"] = cfg.sample_count;
      j["pass"] = result.all_pass();
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : result.checks) {
        checks.push_back({{"suite", c.suite},
                          {"name", c.name},
                          {"measured", c.measured},
                          {"tolerance", c.tolerance},
                          {"bound", c.lower_bound ? "min" : "max"},
                          {"pass", c.pass}});
      }
      j["checks"] = std::move(checks);
      if (!result.products.empty()) {
        nlohmann::json products = nlohmann::json::array();
        for (const auto& p : result.products) {
          products.push_back({{"left", p.left},
                              {"right", p.right},
                              {"coefficient", to_json(p.coefficient)},
                              {"unit", p.unit},
                              {"matches_table", p.matches_table}});
        }
        j["products"] = std::move(products);
      }
      if (!result.lorentz_audit.empty()) {
        nlohmann::json audit = nlohmann::json::array();
        for (const auto& v : result.lorentz_audit) {
          audit.push_back({{"line", v.label},
                           {"formula", v.formula},
                           {"max_deviation", v.max_deviation},
                           {"verdict", v.agrees ? "agrees" : "disagrees"}});
        }
        j["lorentz_closed_form_audit"] = std::move(audit);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv: {
      out << "suite,name,measured,tolerance,bound,pass\n";
      for (const auto& c : result.checks) {
        out << c.suite << ',' << c.name << ',' << format_number(c.measured) << ',' << format_number(c.tolerance)
            << ',' << (c.lower_bound ? "min" : "max") << ',' << (c.pass ? "true" : "false") << '\n';
      }
      for (const auto& v : result.lorentz_audit) {
        out << "lorentz_audit," << v.label << ',' << format_number(v.max_deviation) << ",1e-12,max,"
            << (v.agrees ? "true" : "false") << '\n';
      }
      break;
    }
    case OutputFormat::text: {
      for (const auto& p : result.products) {
        out << p.left << " * " << p.right << " = (" << p.coefficient.real() << (p.coefficient.imag() < 0 ? "" : "+")
            << p.coefficient.imag() << "i) " << p.unit << (p.matches_table ? "" : "  MISMATCH") << '\n';
      }
      for (const auto& c : result.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.suite << '/' << c.name << "  measured=" << format_number(c.measured)
            << (c.lower_bound ? "  min=" : "  tol=") << format_number(c.tolerance) << '\n';
      }
      for (const auto& v : result.lorentz_audit) {
        out << "AUDIT " << v.label << "  " << (v.agrees ? "agrees" : "disagrees")
            << "  max_deviation=" << format_number(v.max_deviation) << '\n';
      }
      out << (result.all_pass() ? "all checks passed" : "some checks failed") << '\n';
      break;
    }
  }
}

int run_suite(const SuiteConfig& cfg, std::ostream& out) {
  const SuiteResult result = evaluate_suite(cfg);
  write_suite_result(cfg, result, out);
  return result.all_pass() ? 0 : 1;
}

}  // namespace sedeon::cli
