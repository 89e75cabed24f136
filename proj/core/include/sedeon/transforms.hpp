#pragma once

#include <span>
#include <string>
#include <vector>

#include "sedeon/sedeon.hpp"

namespace sedeon {

/// Rotation by theta (radians) about a real unit axis.
///
/// The axis is normalised on construction if it is within 1e-9 of unit length
/// and rejected with DomainError otherwise.
class Rotor {
 public:
  Rotor(double theta, const Vec3& axis);

  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] const Vec3& axis() const noexcept { return axis_; }

 private:
  double theta_;
  Vec3 axis_;
};

/// Lorentz boost with rapidity parameter theta and direction m, where
/// tanh(2 theta) = v/c.
class Boost {
 public:
  Boost(double rapidity, const Vec3& direction);

  /// theta = artanh(beta) / 2. Requires |beta| < 1.
  static Boost from_velocity(double beta, const Vec3& direction);

  [[nodiscard]] double rapidity() const noexcept { return rapidity_; }
  [[nodiscard]] const Vec3& direction() const noexcept { return direction_; }
  [[nodiscard]] double velocity_ratio() const noexcept;
  [[nodiscard]] Boost inverse() const { return Boost(-rapidity_, direction_); }

 private:
  double rapidity_;
  Vec3 direction_;
};

struct EventVector {
  double t = 0.0;
  Vec3 r{};
  double c = 1.0;
};

struct BoostedEvent {
  double t;
  Vec3 r;
};

struct SedeonPair {
  Sedeon op;
  Sedeon conj;
};

enum class Inversion { time, space, spacetime };

[[nodiscard]] const char* to_string(Inversion mode) noexcept;

/// U = cos(theta/2) + i sin(theta/2) n and its complex conjugate U*.
[[nodiscard]] SedeonPair rotor_sedeon(const Rotor& r);

/// U* V U.
[[nodiscard]] Sedeon rotate(const Sedeon& v, const Rotor& r);

/// V_0 + V cos(theta) + (1 - cos(theta)) (n . V) n - i sin(theta) [n x V].
/// Cross-check evaluator for rotate().
[[nodiscard]] Sedeon rotate_closed_form(const Sedeon& v, const Rotor& r);

/// Sandwich by e_2 (time), e_1 (space) or e_3 (space-time).
[[nodiscard]] Sedeon invert(const Sedeon& v, Inversion mode);

/// Sign flips of the e-basis groups V0 + e1 V1 + e2 V2 + e3 V3 that each inversion produces.
[[nodiscard]] Sedeon invert_sign_pattern(const Sedeon& v, Inversion mode);

/// L = cosh(theta) - e_3 m sinh(theta), L* = cosh(theta) + e_3 m sinh(theta).
[[nodiscard]] SedeonPair boost_sedeon(const Boost& b);

/// L* V L.
[[nodiscard]] Sedeon lorentz_transform(const Sedeon& v, const Boost& b);

/// S = i e_1 c t + e_2 r.
[[nodiscard]] Sedeon event_sedeon(const EventVector& e) noexcept;

/// Scalar part of S S = -c^2 t^2 + |r|^2. Throws ContractViolation if S has
/// content outside (1,0) and (2,1..3) beyond 1e-12 of its largest component,
/// or if the non-scalar part of S S does not vanish to the same tolerance.
[[nodiscard]] Complex interval(const Sedeon& s);

/// Boost an event through lorentz_transform and read t' from e_1, r' from e_2.
[[nodiscard]] BoostedEvent boost_event(const EventVector& e, const Boost& b);

/// Textbook boost: t' = gamma (t - x v / c^2), x' = gamma (x - v t), transverse unchanged,
/// with x the coordinate along the boost direction.
[[nodiscard]] BoostedEvent boost_event_standard(const EventVector& e, const Boost& b);

/// One line of the component-wise closed form for L* V L.
struct ClosedFormLineVerdict {
  std::string label;        // e.g. "V'_t"
  std::string formula;      // the closed-form right-hand side, as text
  double max_deviation = 0.0;
  bool agrees = false;
};

/// Evaluate each component line of the expanded Lorentz closed form against the
/// sandwich product on every (V, B) pair. Lines are reported in a fixed order.
[[nodiscard]] std::vector<ClosedFormLineVerdict> audit_lorentz_closed_form(
    std::span<const Sedeon> samples, std::span<const Boost> boosts, double tolerance = 1e-12);

}  // namespace sedeon
