#include "sedeon/matrix_rep.hpp"

#include <Eigen/SVD>

#include "sedeon/algebra.hpp"

namespace sedeon {
namespace {

void check_unit_index(int i, int lo, const char* what) {
  if (i < lo || i > 3) throw DomainError(std::string(what) + " index out of range: " + std::to_string(i));
}

// The four printed unit matrices; identical for the e- and a-triples.
Matrix4 unit_matrix(int u) {
  const Complex o{0.0, 0.0};
  const Complex l{1.0, 0.0};
  const Complex i{0.0, 1.0};
  Matrix4 m;
  switch (u) {
    case 0:
      m.setIdentity();
      break;
    case 1:
      m << o, l, o, o,
           l, o, o, o,
           o, o, o, -i,
           o, o, i, o;
      break;
    case 2:
      m << o, o, l, o,
           o, o, o, i,
           l, o, o, o,
           o, -i, o, o;
      break;
    default:
      m << o, o, o, l,
           o, o, -i, o,
           o, i, o, o,
           l, o, o, o;
      break;
  }
  return m;
}

Matrix16 kron(const Matrix4& outer, const Matrix4& inner) {
  Matrix16 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.block<4, 4>(4 * i, 4 * j) = outer(i, j) * inner;
  return r;
}

}  // namespace

Matrix4 unit_matrix_e(int n) {
  check_unit_index(n, 0, "e-unit");
  return unit_matrix(n);
}

Matrix4 unit_matrix_a(int k) {
  check_unit_index(k, 0, "a-unit");
  return unit_matrix(k);
}

Vector16 vec(const Sedeon& v) noexcept {
  Vector16 x;
  for (int i = 0; i < 16; ++i) x(i) = v.flat(static_cast<std::size_t>(i));
  return x;
}

Sedeon from_vec(const Vector16& x) noexcept {
  Sedeon v;
  for (int i = 0; i < 16; ++i) v.flat(static_cast<std::size_t>(i)) = x(i);
  return v;
}

Vector16 vec_a_major(const Sedeon& v) noexcept {
  Vector16 x;
  for (int n = 0; n < 4; ++n)
    for (int k = 0; k < 4; ++k) x(k * 4 + n) = v(n, k);
  return x;
}

Matrix16 left_regular_matrix(const Sedeon& v) {
  Matrix16 m = Matrix16::Zero();
  for (int n = 0; n < 4; ++n) {
    Matrix4 block = Matrix4::Zero();
    for (int k = 0; k < 4; ++k) block += v(n, k) * unit_matrix_a(k);
    m += kron(unit_matrix_e(n), block);
  }
  return m;
}

Matrix16 left_regular_matrix_a_major(const Sedeon& v) {
  Matrix16 m = Matrix16::Zero();
  for (int k = 0; k < 4; ++k) {
    Matrix4 block = Matrix4::Zero();
    for (int n = 0; n < 4; ++n) block += v(n, k) * unit_matrix_e(n);
    m += kron(unit_matrix_a(k), block);
  }
  return m;
}

Matrix16 a_major_permutation() {
  Matrix16 p = Matrix16::Zero();
  for (int n = 0; n < 4; ++n)
    for (int k = 0; k < 4; ++k) p(k * 4 + n, n * 4 + k) = Complex{1.0, 0.0};
  return p;
}

int basis_matrix_rank(double tolerance) {
  Eigen::MatrixXcd stacked(256, 16);
  for (int i = 0; i < 16; ++i) {
    const Matrix16 m = left_regular_matrix(Sedeon::basis(SedeonIndex::from_flat(static_cast<std::size_t>(i))));
    stacked.col(i) = Eigen::Map<const Eigen::Matrix<Complex, 256, 1>>(m.data());
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tolerance) ++rank;
  return rank;
}

DiracComponents dirac_project(const Sedeon& v) {
  const Sedeon v0 = spacetime_scalar(v, 0);
  const Sedeon v1 = spacetime_scalar(v, 1);
  const Sedeon v2 = spacetime_scalar(v, 2);
  const Sedeon v3 = spacetime_scalar(v, 3);
  const Complex half{0.5, 0.0};
  const Complex half_i{0.0, 0.5};
  DiracComponents d;
  d.w[0] = linear_combine(half, v0, half, v3);
  d.w[1] = linear_combine(half, v1, half_i, v2);
  d.w[2] = linear_combine(half, v1, -half_i, v2);
  d.w[3] = linear_combine(half, v0, -half, v3);
  return d;
}

Sedeon dirac_reassemble(const DiracComponents& d) {
  const Sedeon one = Sedeon::one();
  const Sedeon a1 = Sedeon::basis(0, 1);
  const Sedeon a2 = Sedeon::basis(0, 2);
  const Sedeon a3 = Sedeon::basis(0, 3);
  const Sedeon basis[4] = {one + a3, a1 - kI * a2, a1 + kI * a2, one - a3};
  Sedeon v;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!d.w[i].is_pure_scalar()) throw ContractViolation("Dirac component W is not a sedeon-scalar");
    v += mul(d.w[i], basis[i]);
  }
  return v;
}

Matrix4 sigma_matrix(int j) {
  check_unit_index(j, 1, "sigma");
  const Complex o{0.0, 0.0};
  const Complex l{1.0, 0.0};
  const Complex i{0.0, 1.0};
  Matrix4 m;
  switch (j) {
    case 1:
      m << o, l, o, o,
           l, o, o, o,
           o, o, o, l,
           o, o, l, o;
      break;
    case 2:
      m << o, -i, o, o,
           i, o, o, o,
           o, o, o, -i,
           o, o, i, o;
      break;
    default:
      m << l, o, o, o,
           o, -l, o, o,
           o, o, l, o,
           o, o, o, -l;
      break;
  }
  return m;
}

Matrix4 dirac_action_matrix(int j) {
  check_unit_index(j, 1, "sigma");
  const Sedeon aj = Sedeon::basis(0, j);
  Matrix4 m = Matrix4::Zero();
  for (int col = 0; col < 4; ++col) {
    DiracComponents unit;
    unit.w[static_cast<std::size_t>(col)] = Sedeon::one();
    const DiracComponents image = dirac_project(mul(aj, dirac_reassemble(unit)));
    for (int row = 0; row < 4; ++row) {
      const Sedeon& w = image.w[static_cast<std::size_t>(row)];
      // Acting on a unit absolute W the image has absolute content only.
      m(row, col) = w(0, 0);
    }
  }
  return m;
}

double smallest_singular_value(const Matrix16& m) {
  Eigen::JacobiSVD<Matrix16> svd(m);
  return svd.singularValues()(15);
}

Sedeon smallest_singular_vector(const Matrix16& m) {
  Eigen::JacobiSVD<Matrix16> svd(m, Eigen::ComputeFullV);
  return from_vec(svd.matrixV().col(15));
}

}  // namespace sedeon
