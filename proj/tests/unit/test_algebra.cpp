#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "sedeon/algebra.hpp"
#include "sedeon/structure_table.hpp"

using namespace sedeon;

namespace {

Sedeon e(int n) { return Sedeon::basis(n, 0); }
Sedeon a(int k) { return Sedeon::basis(0, k); }

}  // namespace

TEST(SedeonIndex, RejectsOutOfRange) {
  EXPECT_THROW(SedeonIndex(4, 0), DomainError);
  EXPECT_THROW(SedeonIndex(0, -1), DomainError);
  EXPECT_THROW(basis_element(-1, 2), DomainError);
  EXPECT_EQ(SedeonIndex(3, 2).flat(), 14u);
  EXPECT_EQ(SedeonIndex::from_flat(14), SedeonIndex(3, 2));
}

TEST(BasisElement, PlacesSingleUnitComponent) {
  EXPECT_EQ(basis_element(0, 0), Sedeon::one());
  const Sedeon b = basis_element(3, 2);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(b.flat(i), (i == 14 ? Complex{1, 0} : Complex{}));
}

TEST(LinearCombine, Examples) {
  SedeonSampler rng(gen::kSeed);
  const Sedeon x = rng.sedeon();
  const Sedeon y = rng.sedeon();
  EXPECT_EQ(linear_combine(1.0, x, 0.0, y), x);
  EXPECT_EQ(linear_combine(1.0, x, -1.0, x), Sedeon::zero());
  const Sedeon z = linear_combine(kI, Sedeon::one(), 1.0, e(1));
  EXPECT_EQ(z(0, 0), kI);
  EXPECT_EQ(z(1, 0), Complex(1.0, 0.0));
  EXPECT_EQ(max_norm(z - kI * Sedeon::one() - e(1)), 0.0);
}

TEST(UnitTable, MatchesPrintedTableForBothTriples) {
  for (int p = 1; p < 4; ++p)
    for (int q = 1; q < 4; ++q) {
      const auto want = oracle::printed_table(p, q);
      EXPECT_EQ(StructureTable::e_rule(p, q).coefficient(), want.coefficient) << p << q;
      EXPECT_EQ(StructureTable::e_rule(p, q).index, want.unit);
      EXPECT_EQ(StructureTable::a_rule(p, q).coefficient(), want.coefficient);
      EXPECT_EQ(StructureTable::a_rule(p, q).index, want.unit);
      EXPECT_EQ(mul(a(p), a(q)), want.coefficient * a(want.unit));
      EXPECT_EQ(mul(e(p), e(q)), want.coefficient * e(want.unit));
    }
}

TEST(UnitTable, QuarterTurnsAreExact) {
  const Complex z{0.3, -1.7};
  EXPECT_EQ(times_i_pow(z, 1), kI * z);
  EXPECT_EQ(times_i_pow(z, 2), -z);
  EXPECT_EQ(times_i_pow(z, 3), -kI * z);
  EXPECT_EQ(times_i_pow(z, 4), z);
}

TEST(Mul, ExamplesFromTables) {
  EXPECT_EQ(mul(a(1), a(2)), kI * a(3));
  EXPECT_EQ(mul(e(2), e(1)), -kI * e(3));
  // (i e3)(i a3) = -e3 a3, and the Kronecker oracle agrees.
  const Sedeon lhs = Sedeon::basis(1, 1);
  const Sedeon rhs = Sedeon::basis(2, 2);
  EXPECT_EQ(mul(lhs, rhs), -Sedeon::basis(3, 3));
  EXPECT_EQ(gen::from_col(oracle::product(gen::to_col(lhs), gen::to_col(rhs))), -Sedeon::basis(3, 3));
}

TEST(Mul, EUnitsCommuteWithAUnits) {
  for (int n = 1; n < 4; ++n)
    for (int k = 1; k < 4; ++k) {
      EXPECT_EQ(mul(e(n), a(k)), Sedeon::basis(n, k));
      EXPECT_EQ(mul(a(k), e(n)), Sedeon::basis(n, k));
    }
}

TEST(Mul, AllBasisPairsMatchKroneckerOracleExactly) {
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const Sedeon x = Sedeon::basis(SedeonIndex::from_flat(i));
      const Sedeon y = Sedeon::basis(SedeonIndex::from_flat(j));
      EXPECT_EQ(mul(x, y), gen::from_col(oracle::product(gen::to_col(x), gen::to_col(y)))) << i << "," << j;
    }
}

TEST(MulProperty, AgreesWithKroneckerOracleOnRandomPairs) {
  SedeonSampler rng(gen::kSeed + 1);
  for (int s = 0; s < 200; ++s) {
    const Sedeon x = s % 3 == 0 ? gen::sparse(rng) : rng.sedeon();
    const Sedeon y = rng.sedeon();
    const double tol = 1e-12 * gen::scale_of(x) * gen::scale_of(y);
    EXPECT_LE(oracle::max_abs_diff(gen::to_col(mul(x, y)), oracle::product(gen::to_col(x), gen::to_col(y))), tol);
  }
}

TEST(MulProperty, Associative) {
  SedeonSampler rng(gen::kSeed + 2);
  for (int s = 0; s < 1000; ++s) {
    const Sedeon x = rng.unit_modulus_sedeon();
    const Sedeon y = rng.unit_modulus_sedeon();
    const Sedeon z = rng.unit_modulus_sedeon();
    const double scale = max_norm(x) * max_norm(y) * max_norm(z);
    ASSERT_LE(max_distance(mul(mul(x, y), z), mul(x, mul(y, z))), 1e-12 * scale);
  }
}

TEST(MulProperty, NotCommutative) {
  EXPECT_NE(mul(a(1), a(2)), mul(a(2), a(1)));
  EXPECT_EQ(mul(a(2), a(1)), -kI * a(3));
}

TEST(MulProperty, BilinearOnBasisIsExact) {
  // Coefficients chosen so every product and sum is representable.
  const Complex x{2.0, -1.0};
  const Complex y{0.5, 4.0};
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const Sedeon p = Sedeon::basis(SedeonIndex::from_flat(i));
      const Sedeon q = Sedeon::basis(SedeonIndex::from_flat(j));
      const Sedeon r = Sedeon::basis(SedeonIndex::from_flat((i * 7 + j) % 16));
      EXPECT_EQ(mul(linear_combine(x, p, y, q), r), linear_combine(x, mul(p, r), y, mul(q, r)));
      EXPECT_EQ(mul(r, linear_combine(x, p, y, q)), linear_combine(x, mul(r, p), y, mul(r, q)));
    }
}

TEST(MulProperty, BilinearOnRandomSamples) {
  SedeonSampler rng(gen::kSeed + 3);
  for (int s = 0; s < 200; ++s) {
    const Sedeon p = rng.sedeon(), q = rng.sedeon(), r = rng.sedeon();
    const Complex x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Complex y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    EXPECT_LE(max_distance(mul(linear_combine(x, p, y, q), r), linear_combine(x, mul(p, r), y, mul(q, r))), 1e-12 * 8);
  }
}

TEST(ScalarProduct, Examples) {
  EXPECT_EQ(scalar_product(a(1), a(1)), Sedeon::one());
  EXPECT_EQ(scalar_product(a(1), a(2)), Sedeon::zero());
  EXPECT_EQ(scalar_product(Sedeon::basis(1, 1), Sedeon::basis(2, 1)), kI * e(3));
}

TEST(ScalarProduct, RejectsScalarContent) {
  EXPECT_THROW((void)scalar_product(Sedeon::one(), a(1)), ContractViolation);
  EXPECT_THROW((void)scalar_product(a(1), e(2)), ContractViolation);
  EXPECT_THROW((void)vector_product(a(1) + e(3), a(2)), ContractViolation);
}

TEST(VectorProduct, Examples) {
  EXPECT_EQ(vector_product(a(1), a(2)), kI * a(3));
  EXPECT_EQ(vector_product(a(1), a(1)), Sedeon::zero());
  EXPECT_EQ(vector_product(a(1), vector_product(a(1), a(2))), a(2));
}

TEST(VectorProduct, KeepsEUnitOrder) {
  // [e1 a2 x e2 a3] = i (e1 e2) a1 = i (i e3) a1
  EXPECT_EQ(vector_product(Sedeon::basis(1, 2), Sedeon::basis(2, 3)), -Sedeon::basis(3, 1));
  EXPECT_EQ(vector_product(Sedeon::basis(2, 3), Sedeon::basis(1, 2)), -Sedeon::basis(3, 1));
}

TEST(TripleProduct, HoldsExactlyOnAbsoluteBasisVectors) {
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      for (int k = 1; k < 4; ++k) {
        const Sedeon lhs = vector_product(a(i), vector_product(a(j), a(k)));
        const Sedeon rhs = -mul(a(j), scalar_product(a(i), a(k))) + mul(a(k), scalar_product(a(i), a(j)));
        EXPECT_EQ(lhs, rhs) << i << j << k;
      }
}

TEST(TripleProduct, HoldsOnRandomAbsoluteVectors) {
  SedeonSampler rng(gen::kSeed + 4);
  constexpr std::uint32_t kAbsoluteVector = 0x000E;
  for (int s = 0; s < 200; ++s) {
    const Sedeon x = gen::masked(rng, kAbsoluteVector);
    const Sedeon y = gen::masked(rng, kAbsoluteVector);
    const Sedeon z = gen::masked(rng, kAbsoluteVector);
    const Sedeon lhs = vector_product(x, vector_product(y, z));
    const Sedeon rhs = -mul(y, scalar_product(x, z)) + mul(z, scalar_product(x, y));
    EXPECT_LE(max_distance(lhs, rhs), 1e-12 * 4);
  }
}

TEST(Decompose, Examples) {
  auto d = decompose(e(2));
  EXPECT_EQ(d.scalar, e(2));
  EXPECT_EQ(d.vector, Sedeon::zero());
  d = decompose(a(3));
  EXPECT_EQ(d.scalar, Sedeon::zero());
  EXPECT_EQ(d.vector, a(3));
  d = decompose(Sedeon::basis(1, 1) + e(1));
  EXPECT_EQ(d.scalar, e(1));
  EXPECT_EQ(d.vector, Sedeon::basis(1, 1));
}

TEST(Decompose, ProductSplitsIntoScalarAndVectorTerms) {
  auto split = [](const Sedeon& x, const Sedeon& y) {
    const auto [x0, xv] = decompose(x);
    const auto [y0, yv] = decompose(y);
    return mul(x0, y0) + mul(x0, yv) + mul(xv, y0) + scalar_product(xv, yv) + vector_product(xv, yv);
  };
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      const Sedeon x = Sedeon::basis(SedeonIndex::from_flat(i));
      const Sedeon y = Sedeon::basis(SedeonIndex::from_flat(j));
      EXPECT_EQ(mul(x, y), split(x, y));
    }
  SedeonSampler rng(gen::kSeed + 5);
  for (int s = 0; s < 200; ++s) {
    const Sedeon x = rng.sedeon(), y = rng.sedeon();
    EXPECT_LE(max_distance(mul(x, y), split(x, y)), 1e-12 * 4);
  }
}

TEST(DecomposeProperty, ReconstructsExactly) {
  SedeonSampler rng(gen::kSeed + 6);
  for (int s = 0; s < 100; ++s) {
    const Sedeon x = rng.sedeon();
    const auto [x0, xv] = decompose(x);
    EXPECT_TRUE(x0.is_pure_scalar());
    EXPECT_TRUE(xv.is_pure_vector());
    EXPECT_EQ(x0 + xv, x);
  }
}

TEST(ConjComplex, Examples) {
  const Sedeon real = 2.0 * Sedeon::basis(1, 2) - 0.5 * a(3);
  EXPECT_EQ(conj_complex(real), real);
  EXPECT_EQ(conj_complex(kI * Sedeon::one()), -kI * Sedeon::one());
}

TEST(SpacetimeScalar, RoundTripsThroughVectorUnit) {
  SedeonSampler rng(gen::kSeed + 7);
  const Sedeon x = rng.sedeon();
  Sedeon rebuilt;
  for (int k = 0; k < 4; ++k) {
    const Sedeon part = spacetime_scalar(x, k);
    EXPECT_TRUE(part.is_pure_scalar());
    rebuilt += times_vector_unit(part, k);
  }
  EXPECT_EQ(rebuilt, x);
  EXPECT_THROW((void)times_vector_unit(a(1), 2), ContractViolation);
}

TEST(ToString, NamesUnits) {
  EXPECT_NE(to_string(Sedeon::basis(3, 3)).find("e3a3"), std::string::npos);
  EXPECT_EQ(to_string(Sedeon::zero()), "0");
}
