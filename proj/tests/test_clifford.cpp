#include "oracle/clifford_algebra.hpp"
#include "wittkit/clifford.hpp"

#include <gtest/gtest.h>

using namespace wittkit;
using namespace wittkit::clifford;

namespace {

const std::array<FgAbGroup, 8> kKO = {FgAbGroup::free(1),  FgAbGroup::cyclic(2), FgAbGroup::cyclic(2),
                                      FgAbGroup::trivial(), FgAbGroup::free(1),  FgAbGroup::trivial(),
                                      FgAbGroup::trivial(), FgAbGroup::trivial()};

}  // namespace

TEST(ClassifyClifford, SmallCases) {
  EXPECT_EQ(classify_clifford(0, 0), (CliffordClass{1, Base::Real, false}));
  EXPECT_EQ(classify_clifford(1, 0), (CliffordClass{1, Base::Complex, false}));
  EXPECT_EQ(classify_clifford(2, 0), (CliffordClass{1, Base::Quaternion, false}));
  EXPECT_EQ(classify_clifford(0, 1), (CliffordClass{1, Base::Real, true}));
  EXPECT_EQ(classify_clifford(1, 1), (CliffordClass{2, Base::Real, false}));
  EXPECT_EQ(classify_clifford(3, 0), (CliffordClass{1, Base::Quaternion, true}));
  EXPECT_EQ(classify_clifford(0, 2), (CliffordClass{2, Base::Real, false}));
  EXPECT_EQ(classify_clifford(0, 3), (CliffordClass{2, Base::Complex, false}));
  EXPECT_EQ(classify_clifford(7, 0), (CliffordClass{8, Base::Real, true}));
  EXPECT_EQ(classify_clifford(8, 0), (CliffordClass{16, Base::Real, false}));
}

TEST(ClassifyClifford, Rendering) {
  EXPECT_EQ(classify_clifford(0, 0).to_string(), "R");
  EXPECT_EQ(classify_clifford(3, 0).to_string(), "H x H");
  EXPECT_EQ(classify_clifford(4, 1).to_string(), "M_2(H) x M_2(H)");
  EXPECT_EQ(classify_clifford(0, 3).to_string(), "M_2(C)");
}

TEST(ClassifyClifford, DimensionIsTwoToTheNumberOfGenerators) {
  for (unsigned p = 0; p <= 12; ++p)
    for (unsigned q = 0; q <= 12; ++q) {
      const auto c = classify_clifford(p, q);
      EXPECT_EQ(c.real_dimension(), pow2(p + q)) << p << "," << q;
      EXPECT_TRUE(!c.split || c.base != Base::Complex);
    }
}

TEST(ClassifyCliffordProperty, EightfoldPeriodicityScalesMatrixSizeBySixteen) {
  for (unsigned p = 0; p <= 10; ++p)
    for (unsigned q = 0; q <= 10; ++q) {
      auto c = classify_clifford(p, q);
      c.matrix_size *= 16;
      EXPECT_EQ(classify_clifford(p + 8, q), c) << p << "," << q;
      EXPECT_EQ(classify_clifford(p, q + 8), c) << p << "," << q;
    }
}

TEST(ClassifyCliffordOracle, StructureConstantsPinTheWedderburnType) {
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned p = 0; p <= n; ++p) {
      const unsigned q = n - p;
      const auto inv = oracle::clifford_structure_constants(p, q);
      const auto types = oracle::matching_types(inv);
      ASSERT_EQ(types.size(), 1u) << "C^{" << p << "," << q << "} invariants are not decisive";
      const auto c = classify_clifford(p, q);
      EXPECT_EQ(Integer(types[0].matrix_size), c.matrix_size) << p << "," << q;
      EXPECT_EQ(types[0].base, base_letter(c.base)) << p << "," << q;
      EXPECT_EQ(types[0].split, c.split) << p << "," << q;
    }
}

TEST(CliffordOracle, Examples) {
  auto inv = oracle::clifford_structure_constants(0, 1);
  EXPECT_EQ(inv.center_dimension, 2u);
  EXPECT_EQ(inv.central_idempotents, 2u);
  inv = oracle::clifford_structure_constants(1, 0);
  EXPECT_EQ(inv.center_dimension, 2u);
  EXPECT_EQ(inv.central_idempotents, 1u);
  inv = oracle::clifford_structure_constants(1, 1);
  EXPECT_EQ(inv.center_dimension, 1u);
  EXPECT_EQ(inv.central_idempotents, 1u);
  EXPECT_EQ(inv.dimension, 4u);
  inv = oracle::clifford_structure_constants(2, 0);
  EXPECT_EQ(inv.trace_signature, -2);
}

TEST(AbsKGroup, Examples) {
  EXPECT_EQ(abs_k_group(0, 0), FgAbGroup::free(1));
  EXPECT_EQ(abs_k_group(0, 1), FgAbGroup::cyclic(2));
  EXPECT_EQ(abs_k_group(1, 0), FgAbGroup::trivial());
}

TEST(AbsKGroup, RestrictionMatrixOfTheSplitBase) {
  // R x R -> R: both simples restrict to the unique simple of R
  EXPECT_EQ(restriction_multiplicities(classify_clifford(0, 1), classify_clifford(0, 0)), (IntMatrix{{1, 1}}));
  // M_2(R) -> R x R: R^2 splits as one copy of each simple
  EXPECT_EQ(restriction_multiplicities(classify_clifford(0, 2), classify_clifford(0, 1)), (IntMatrix{{1}, {1}}));
}

TEST(AbsKGroupProperty, DependsOnlyOnTheDifferenceModEight) {
  for (unsigned p = 0; p <= 12; ++p)
    for (unsigned q = 0; q <= 12; ++q)
      EXPECT_EQ(abs_k_group(p, q), kKO[mod_floor(static_cast<std::int64_t>(q) - p, 8)]) << p << "," << q;
}
