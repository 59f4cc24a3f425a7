#include <gtest/gtest.h>

#include "qnf/error.hpp"
#include "qnf/hosvd.hpp"
#include "qnf/reductions.hpp"
#include "qnf/rng.hpp"
#include "qnf/verify.hpp"
#include "test_util.hpp"

using namespace qnf;
using qnf::test::max_diff;

TEST(GroupTags, RoundTripNames) {
  for (auto tag : {GroupTag::Unitary, GroupTag::SpecialOrthogonal, GroupTag::SL2, GroupTag::DiagonalTorus,
                   GroupTag::SignTorus})
    EXPECT_EQ(group_tag_from_string(to_string(tag)), tag);
  EXPECT_EQ(to_string(GroupTag::SpecialOrthogonal), "specialOrthogonal");
  EXPECT_THROW(group_tag_from_string("lorentz"), Error);
}

TEST(GroupTags, DefectDetectsViolations) {
  Rng rng(41);
  GroupFactorList u{GroupTag::Unitary, qnf::test::random_unitaries(3, 2, rng)};
  EXPECT_LT(group_defect(u), 1e-14);
  u.factors[1](0, 0) += 0.1;
  EXPECT_GT(group_defect(u), 1e-3);
  GroupFactorList s{GroupTag::SL2, {random_sl2(rng), random_sl2(rng)}};
  EXPECT_LT(group_defect(s), 1e-12);
  GroupFactorList sign{GroupTag::SignTorus, {CMatrix{{1.0, 0.0}, {0.0, -1.0}}}};
  EXPECT_EQ(group_defect(sign), 0.0);
  sign.factors[0](1, 1) = 0.5;
  EXPECT_GT(group_defect(sign), 0.1);
}

TEST(Hosvd, CoreGramsAreDiagonalAndDecreasing) {
  Rng rng(42);
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, {3, 2, 4}, {2, 2, 2, 2, 2}}) {
    const CTensor t = random_tensor(dims, rng);
    const auto cert = hosvd_core(t);
    EXPECT_LT(cert.residual, 1e-12);
    EXPECT_LT(group_defect(cert.factors), 1e-12);
    for (std::size_t m = 0; m < dims.size(); ++m) {
      const CMatrix g = pi_hermitian(cert.core, m).matrix;
      EXPECT_LT(offdiagonal_mass(cert.core, m, false), 1e-12 * g.frobenius_norm());
      for (std::size_t k = 0; k + 1 < g.rows(); ++k) EXPECT_GT(g(k, k).real(), g(k + 1, k + 1).real());
      EXPECT_GT(cert.gaps[m], 0.0);
    }
    EXPECT_TRUE(verify_certificate(t, cert).ok());
  }
}

TEST(Hosvd, GhzHasRepeatedEigenvaluesOnFirstMode) {
  const CTensor ghz = CTensor::from_kets(3, {{"000", 1.0}, {"111", 1.0}});
  try {
    hosvd_core(ghz);
    FAIL() << "expected RepeatedEigenvalues";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RepeatedEigenvalues);
    EXPECT_EQ(e.mode(), 1);
    EXPECT_TRUE(e.non_generic());
  }
}

TEST(Ohosvd, CoreSymmetricGramsAreDiagonal) {
  Rng rng(43);
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, {4, 4}, {2, 3, 2, 2}}) {
    const CTensor t = random_tensor(dims, rng);
    const auto cert = ohosvd_core(t);
    EXPECT_LT(cert.residual, 1e-10);
    EXPECT_LT(group_defect(cert.factors), 1e-10);
    for (std::size_t m = 0; m < dims.size(); ++m) {
      const CMatrix g = pi_symmetric(cert.core, m).matrix;
      EXPECT_LT(offdiagonal_mass(cert.core, m, true), 1e-9 * g.frobenius_norm());
      for (std::size_t k = 0; k + 1 < g.rows(); ++k) EXPECT_FALSE(lex_less(g(k, k), g(k + 1, k + 1)));
    }
    EXPECT_TRUE(verify_certificate(t, cert).ok());
  }
}

TEST(Ohosvd, MatrixCaseGivesMonomialCore) {
  Rng rng(44);
  const CTensor t = random_tensor({4, 4}, rng);
  const auto cert = ohosvd_core(t);
  const CMatrix core = flatten(cert.core, 0);
  const double cut = 1e-8 * core.max_abs();
  for (std::size_t r = 0; r < 4; ++r) {
    int row = 0, col = 0;
    for (std::size_t c = 0; c < 4; ++c) {
      row += std::abs(core(r, c)) > cut;
      col += std::abs(core(c, r)) > cut;
    }
    EXPECT_LE(row, 1);
    EXPECT_LE(col, 1);
  }
}

TEST(Hosvd, CoreIsUnitaryInvariantUpToPhases) {
  Rng rng(45);
  const CTensor t = random_tensor({2, 2, 2}, rng);
  const CTensor tu = multilinear_apply(t, qnf::test::random_unitaries(3, 2, rng));
  const auto a = hosvd_core(t), b = hosvd_core(tu);
  for (std::size_t m = 0; m < 3; ++m) {
    const CMatrix ga = pi_hermitian(a.core, m).matrix, gb = pi_hermitian(b.core, m).matrix;
    EXPECT_LT(max_diff(ga, gb), 1e-12);
  }
}
