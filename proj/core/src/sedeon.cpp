#include "sedeon/sedeon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sedeon/algebra.hpp"

namespace sedeon {

bool Sedeon::is_pure_vector() const noexcept {
  for (int n = 0; n < 4; ++n)
    if (c_[static_cast<std::size_t>(n * 4)] != Complex{}) return false;
  return true;
}

bool Sedeon::is_pure_scalar() const noexcept {
  for (int n = 0; n < 4; ++n)
    for (int k = 1; k < 4; ++k)
      if (c_[static_cast<std::size_t>(n * 4 + k)] != Complex{}) return false;
  return true;
}

bool Sedeon::is_finite() const noexcept {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

Sedeon operator*(const Sedeon& a, const Sedeon& b) { return mul(a, b); }

double max_norm(const Sedeon& s) noexcept {
  double m = 0.0;
  for (const auto& z : s.components()) m = std::max(m, std::abs(z));
  return m;
}

double max_distance(const Sedeon& a, const Sedeon& b) noexcept { return max_norm(a - b); }

Sedeon absolute_vector(const Vec3& v) noexcept {
  Sedeon s;
  for (int j = 0; j < 3; ++j) s[SedeonIndex(0, j + 1)] = Complex{v[static_cast<std::size_t>(j)], 0.0};
  return s;
}

std::string to_string(const Sedeon& s) {
  static constexpr const char* kE[] = {"", "e1", "e2", "e3"};
  static constexpr const char* kA[] = {"", "a1", "a2", "a3"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < Sedeon::kSize; ++i) {
    const Complex z = s.flat(i);
    if (z == Complex{}) continue;
    const auto idx = SedeonIndex::from_flat(i);
    if (!first) os << " + ";
    first = false;
    os << '(' << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
    if (idx.n() == 0 && idx.k() == 0) {
      os << "*1";
    } else {
      os << '*' << kE[idx.n()] << kA[idx.k()];
    }
  }
  return first ? std::string("0") : os.str();
}

}  // namespace sedeon
