#include "sedeon/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sedeon/algebra.hpp"

namespace sedeon {
namespace {

constexpr double kAxisTolerance = 1e-9;

Vec3 normalized_axis(const Vec3& v, const char* what) {
  const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!std::isfinite(len) || std::abs(len - 1.0) > kAxisTolerance) {
    throw DomainError(std::string(what) + " must be a unit vector (|v| = " + std::to_string(len) + ")");
  }
  return {v[0] / len, v[1] / len, v[2] / len};
}

double dot(const Vec3& a, const Vec3& b) noexcept { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Components of v with space-time unit n, either the k = 0 entry or the k = 1..3 entries.
Sedeon group(const Sedeon& v, int n, bool vector_part) {
  Sedeon out;
  if (vector_part) {
    for (int k = 1; k < 4; ++k) out[SedeonIndex(n, k)] = v[SedeonIndex(n, k)];
  } else {
    out[SedeonIndex(n, 0)] = v[SedeonIndex(n, 0)];
  }
  return out;
}

}  // namespace

Rotor::Rotor(double theta, const Vec3& axis) : theta_(theta), axis_(normalized_axis(axis, "rotation axis")) {
  if (!std::isfinite(theta)) throw DomainError("rotation angle must be finite");
}

Boost::Boost(double rapidity, const Vec3& direction)
    : rapidity_(rapidity), direction_(normalized_axis(direction, "boost direction")) {
  if (!std::isfinite(rapidity)) throw DomainError("rapidity must be finite");
  if (!(std::abs(std::tanh(2.0 * rapidity)) < 1.0)) throw DomainError("boost velocity must satisfy |v/c| < 1");
}

Boost Boost::from_velocity(double beta, const Vec3& direction) {
  if (!(std::abs(beta) < 1.0)) throw DomainError("velocity ratio must satisfy |v/c| < 1");
  return Boost(0.5 * std::atanh(beta), direction);
}

double Boost::velocity_ratio() const noexcept { return std::tanh(2.0 * rapidity_); }

const char* to_string(Inversion mode) noexcept {
  switch (mode) {
    case Inversion::time: return "time";
    case Inversion::space: return "space";
    case Inversion::spacetime: return "spacetime";
  }
  return "?";
}

SedeonPair rotor_sedeon(const Rotor& r) {
  const double c = std::cos(0.5 * r.theta());
  const double s = std::sin(0.5 * r.theta());
  Sedeon u;
  u[SedeonIndex(0, 0)] = Complex{c, 0.0};
  for (int j = 0; j < 3; ++j) u[SedeonIndex(0, j + 1)] = Complex{0.0, s * r.axis()[static_cast<std::size_t>(j)]};
  return {u, conj_complex(u)};
}

Sedeon rotate(const Sedeon& v, const Rotor& r) {
  const auto [u, u_conj] = rotor_sedeon(r);
  return mul(mul(u_conj, v), u);
}

Sedeon rotate_closed_form(const Sedeon& v, const Rotor& r) {
  const auto [scalar, vec] = decompose(v);
  const Sedeon n = absolute_vector(r.axis());
  const double ct = std::cos(r.theta());
  const double st = std::sin(r.theta());
  return scalar + ct * vec + (1.0 - ct) * mul(scalar_product(n, vec), n) +
         Complex{0.0, -st} * vector_product(n, vec);
}

Sedeon invert(const Sedeon& v, Inversion mode) {
  int unit = 0;
  switch (mode) {
    case Inversion::time: unit = 2; break;
    case Inversion::space: unit = 1; break;
    case Inversion::spacetime: unit = 3; break;
  }
  const Sedeon e = Sedeon::basis(unit, 0);
  return mul(mul(e, v), e);
}

Sedeon invert_sign_pattern(const Sedeon& v, Inversion mode) {
  // sign of e_1 V1, e_2 V2, e_3 V3
  std::array<double, 4> sign{1.0, 1.0, 1.0, 1.0};
  switch (mode) {
    case Inversion::time: sign = {1.0, -1.0, 1.0, -1.0}; break;
    case Inversion::space: sign = {1.0, 1.0, -1.0, -1.0}; break;
    case Inversion::spacetime: sign = {1.0, -1.0, -1.0, 1.0}; break;
  }
  Sedeon out = v;
  for (int n = 0; n < 4; ++n)
    for (int k = 0; k < 4; ++k) out[SedeonIndex(n, k)] *= sign[static_cast<std::size_t>(n)];
  return out;
}

SedeonPair boost_sedeon(const Boost& b) {
  const double ch = std::cosh(b.rapidity());
  const double sh = std::sinh(b.rapidity());
  Sedeon l;
  Sedeon l_conj;
  l[SedeonIndex(0, 0)] = Complex{ch, 0.0};
  l_conj[SedeonIndex(0, 0)] = Complex{ch, 0.0};
  for (int j = 0; j < 3; ++j) {
    const double m = b.direction()[static_cast<std::size_t>(j)];
    l[SedeonIndex(3, j + 1)] = Complex{-sh * m, 0.0};
    l_conj[SedeonIndex(3, j + 1)] = Complex{sh * m, 0.0};
  }
  return {l, l_conj};
}

Sedeon lorentz_transform(const Sedeon& v, const Boost& b) {
  const auto [l, l_conj] = boost_sedeon(b);
  return mul(mul(l_conj, v), l);
}

Sedeon event_sedeon(const EventVector& e) noexcept {
  Sedeon s;
  s[SedeonIndex(1, 0)] = Complex{0.0, e.c * e.t};
  for (int j = 0; j < 3; ++j) s[SedeonIndex(2, j + 1)] = Complex{e.r[static_cast<std::size_t>(j)], 0.0};
  return s;
}

Complex interval(const Sedeon& s) {
  const double scale = max_norm(s);
  const double tol = 1e-12 * scale;
  for (int n = 0; n < 4; ++n)
    for (int k = 0; k < 4; ++k) {
      const bool allowed = (n == 1 && k == 0) || (n == 2 && k != 0);
      if (!allowed && std::abs(s(n, k)) > tol) {
        throw ContractViolation("interval: sedeon is not event-shaped (component (" + std::to_string(n) + "," +
                                std::to_string(k) + ") is nonzero)");
      }
    }
  const Sedeon sq = mul(s, s);
  for (std::size_t i = 1; i < Sedeon::kSize; ++i) {
    if (std::abs(sq.flat(i)) > 1e-12 * std::max(1.0, scale * scale)) {
      throw ContractViolation("interval: S S has a non-scalar part");
    }
  }
  return sq(0, 0);
}

BoostedEvent boost_event(const EventVector& e, const Boost& b) {
  if (!(e.c > 0.0)) throw DomainError("speed of light must be positive");
  const Sedeon s = lorentz_transform(event_sedeon(e), b);
  BoostedEvent out{};
  out.t = (s(1, 0) / Complex{0.0, e.c}).real();
  for (int j = 0; j < 3; ++j) out.r[static_cast<std::size_t>(j)] = s(2, j + 1).real();
  return out;
}

BoostedEvent boost_event_standard(const EventVector& e, const Boost& b) {
  if (!(e.c > 0.0)) throw DomainError("speed of light must be positive");
  const double beta = b.velocity_ratio();
  const double v = beta * e.c;
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  const Vec3& m = b.direction();
  const double x = dot(m, e.r);
  BoostedEvent out{};
  out.t = gamma * (e.t - x * v / (e.c * e.c));
  const double x_new = gamma * (x - v * e.t);
  for (std::size_t j = 0; j < 3; ++j) out.r[j] = e.r[j] + (x_new - x) * m[j];
  return out;
}

std::vector<ClosedFormLineVerdict> audit_lorentz_closed_form(std::span<const Sedeon> samples,
                                                             std::span<const Boost> boosts, double tolerance) {
  if (boosts.empty()) throw DomainError("audit needs at least one boost");

  struct Line {
    const char* label;
    const char* formula;
    int n;
    bool vector_part;
    std::function<Sedeon(const Sedeon&, const Sedeon&, double)> rhs;  // (V, m, theta)
  };

  const Sedeon e3 = Sedeon::basis(3, 0);
  auto sc = [](const Sedeon& v, int n) { return group(v, n, false); };
  auto vc = [](const Sedeon& v, int n) { return group(v, n, true); };

  const std::vector<Line> lines = {
      {"V'", "V", 0, false, [&](const Sedeon& v, const Sedeon&, double) { return sc(v, 0); }},
      {"V'_tr", "V_tr", 3, false, [&](const Sedeon& v, const Sedeon&, double) { return sc(v, 3); }},
      {"V'_r", "V_r ch2t + e_tr (m . vec V_t) sh2t", 2, false,
       [&](const Sedeon& v, const Sedeon& m, double t) {
         return std::cosh(2 * t) * sc(v, 2) + std::sinh(2 * t) * mul(e3, scalar_product(m, vc(v, 1)));
       }},
      {"V'_t", "V_t ch2t + e_tr (m . vec V_r) sh2t", 1, false,
       [&](const Sedeon& v, const Sedeon& m, double t) {
         return std::cosh(2 * t) * sc(v, 1) + std::sinh(2 * t) * mul(e3, scalar_product(m, vc(v, 2)));
       }},
      {"vec V'", "vec V ch2t - 2 (m . vec V) m sh^2 t + e_tr [m x vec V_tr] sh2t", 0, true,
       [&](const Sedeon& v, const Sedeon& m, double t) {
         const double sh = std::sinh(t);
         return std::cosh(2 * t) * vc(v, 0) - 2.0 * sh * sh * mul(scalar_product(m, vc(v, 0)), m) +
                std::sinh(2 * t) * mul(e3, vector_product(m, vc(v, 3)));
       }},
      {"vec V'_tr", "vec V_tr ch2t - 2 (m . vec V_tr) m sh^2 t + e_tr [m x vec V] sh2t", 3, true,
       [&](const Sedeon& v, const Sedeon& m, double t) {
         const double sh = std::sinh(t);
         return std::cosh(2 * t) * vc(v, 3) - 2.0 * sh * sh * mul(scalar_product(m, vc(v, 3)), m) +
                std::sinh(2 * t) * mul(e3, vector_product(m, vc(v, 0)));
       }},
      {"vec V'_r", "vec V_r + 2 (m . vec V_r) m sh^2 t + e_tr V_t m sh2t", 2, true,
       [&](const Sedeon& v, const Sedeon& m, double t) {
         const double sh = std::sinh(t);
         return vc(v, 2) + 2.0 * sh * sh * mul(scalar_product(m, vc(v, 2)), m) +
                std::sinh(2 * t) * mul(mul(e3, sc(v, 1)), m);
       }},
      {"vec V'_t", "vec V_t + 2 (m . vec V_t) m sh^2 t + e_tr V_r m sh2t", 1, true,
       [&](const Sedeon& v, const Sedeon& m, double t) {
         const double sh = std::sinh(t);
         return vc(v, 1) + 2.0 * sh * sh * mul(scalar_product(m, vc(v, 1)), m) +
                std::sinh(2 * t) * mul(mul(e3, sc(v, 2)), m);
       }},
  };

  std::vector<ClosedFormLineVerdict> verdicts;
  verdicts.reserve(lines.size());
  for (const auto& line : lines) verdicts.push_back({line.label, line.formula, 0.0, true});

  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Sedeon& v = samples[s];
    const Boost& b = boosts[s % boosts.size()];
    const Sedeon transformed = lorentz_transform(v, b);
    const Sedeon m = absolute_vector(b.direction());
    const double scale = std::max({1.0, max_norm(v), max_norm(transformed)});
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Sedeon lhs = group(transformed, lines[i].n, lines[i].vector_part);
      const Sedeon rhs = lines[i].rhs(v, m, b.rapidity());
      const double dev = max_distance(lhs, rhs) / scale;
      verdicts[i].max_deviation = std::max(verdicts[i].max_deviation, dev);
    }
  }
  for (auto& v : verdicts) v.agrees = v.max_deviation <= tolerance;
  return verdicts;
}

}  // namespace sedeon
