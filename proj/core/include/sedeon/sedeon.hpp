#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

namespace sedeon {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<Complex, 3>;

inline constexpr Complex kI{0.0, 1.0};

/// Raised for out-of-range indices, non-unit axes and other invalid parameters.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an operation's structural precondition on a sedeon does not hold
/// (e.g. a nonzero scalar part handed to the internal product).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Address of one sedeon component: n selects the space-time unit
/// (0 = 1, 1 = e_t, 2 = e_r, 3 = e_tr), k the vector unit (0 = 1, 1..3 = a_1..a_3).
class SedeonIndex {
 public:
  constexpr SedeonIndex(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > 3 || k < 0 || k > 3) {
      throw DomainError("sedeon index out of range: (" + std::to_string(n) + "," +
                        std::to_string(k) + ")");
    }
  }

  [[nodiscard]] constexpr int n() const noexcept { return n_; }
  [[nodiscard]] constexpr int k() const noexcept { return k_; }
  [[nodiscard]] constexpr std::size_t flat() const noexcept {
    return static_cast<std::size_t>(n_ * 4 + k_);
  }

  static constexpr SedeonIndex from_flat(std::size_t i) {
    return SedeonIndex(static_cast<int>(i / 4), static_cast<int>(i % 4));
  }

  friend constexpr bool operator==(SedeonIndex, SedeonIndex) = default;

 private:
  int n_;
  int k_;
};

/// Sixteen complex components V_nk stored n-major, k-minor.
///
/// A sedeon reads either as V0 + e1 V1 + e2 V2 + e3 V3 with V_n absolute
/// scalar-vectors (grouping by n), or as V_0 + V_1 a1 + V_2 a2 + V_3 a3 with
/// V_k space-time scalars (grouping by k). Both views address the same array.
class Sedeon {
 public:
  static constexpr std::size_t kSize = 16;
  using Components = std::array<Complex, kSize>;

  constexpr Sedeon() noexcept : c_{} {}
  constexpr explicit Sedeon(const Components& c) noexcept : c_(c) {}

  static constexpr Sedeon zero() noexcept { return Sedeon{}; }
  static Sedeon one() { return basis(0, 0); }

  /// Unit basis element e_n a_k.
  static Sedeon basis(int n, int k) { return basis(SedeonIndex(n, k)); }
  static Sedeon basis(SedeonIndex idx) {
    Sedeon s;
    s.c_[idx.flat()] = Complex{1.0, 0.0};
    return s;
  }

  [[nodiscard]] const Complex& operator()(int n, int k) const { return c_[SedeonIndex(n, k).flat()]; }
  Complex& operator()(int n, int k) { return c_[SedeonIndex(n, k).flat()]; }
  [[nodiscard]] const Complex& operator[](SedeonIndex i) const noexcept { return c_[i.flat()]; }
  Complex& operator[](SedeonIndex i) noexcept { return c_[i.flat()]; }

  [[nodiscard]] const Complex& flat(std::size_t i) const { return c_.at(i); }
  Complex& flat(std::size_t i) { return c_.at(i); }

  [[nodiscard]] std::span<const Complex, kSize> components() const noexcept { return c_; }
  [[nodiscard]] const Components& array() const noexcept { return c_; }

  /// True when every k = 0 component is zero (a pure sedeon-vector).
  [[nodiscard]] bool is_pure_vector() const noexcept;
  /// True when every k != 0 component is zero (a sedeon-scalar).
  [[nodiscard]] bool is_pure_scalar() const noexcept;
  [[nodiscard]] bool is_finite() const noexcept;

  Sedeon& operator+=(const Sedeon& o) noexcept {
    for (std::size_t i = 0; i < kSize; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Sedeon& operator-=(const Sedeon& o) noexcept {
    for (std::size_t i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Sedeon& operator*=(Complex s) noexcept {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Sedeon operator+(Sedeon a, const Sedeon& b) noexcept { return a += b; }
  friend Sedeon operator-(Sedeon a, const Sedeon& b) noexcept { return a -= b; }
  friend Sedeon operator-(Sedeon a) noexcept { return a *= Complex{-1.0, 0.0}; }
  friend Sedeon operator*(Complex s, Sedeon a) noexcept { return a *= s; }
  friend Sedeon operator*(Sedeon a, Complex s) noexcept { return a *= s; }
  friend Sedeon operator*(double s, Sedeon a) noexcept { return a *= Complex{s, 0.0}; }
  friend Sedeon operator*(Sedeon a, double s) noexcept { return a *= Complex{s, 0.0}; }

  /// Sedeon product; see mul().
  friend Sedeon operator*(const Sedeon& a, const Sedeon& b);

  friend bool operator==(const Sedeon&, const Sedeon&) = default;

 private:
  Components c_;
};

/// Largest component magnitude. A test metric only; the algebra has no norm of its own.
[[nodiscard]] double max_norm(const Sedeon& s) noexcept;

/// max_norm(a - b).
[[nodiscard]] double max_distance(const Sedeon& a, const Sedeon& b) noexcept;

/// Absolute vector sum_j v_j a_j (n = 0 components only).
[[nodiscard]] Sedeon absolute_vector(const Vec3& v) noexcept;

/// Human-readable symbolic form, e.g. "(0+1i)*e3a3 + 2*1".
[[nodiscard]] std::string to_string(const Sedeon& s);

}  // namespace sedeon
