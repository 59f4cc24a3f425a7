#include <gtest/gtest.h>

#include <cmath>

#include "qnf/error.hpp"
#include "qnf/reductions.hpp"
#include "qnf/rng.hpp"
#include "qnf/slocc_nf.hpp"
#include "qnf/verify.hpp"
#include "test_util.hpp"

using namespace qnf;
using qnf::test::max_diff;
using qnf::test::random_sl2s;

namespace {
const cplx I{0.0, 1.0};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}
}  // namespace

TEST(SignS, HalfPlanes) {
  EXPECT_EQ(sign_s(1.0), 0);
  EXPECT_EQ(sign_s(-1.0), 1);
  EXPECT_EQ(sign_s(I), 0);
  EXPECT_EQ(sign_s(-I), 1);
  EXPECT_EQ(sign_s({1e-300, -5.0}), 0);
  EXPECT_EQ(kind_of([] { sign_s(0.0); }), ErrorKind::ZeroArgument);
}

TEST(OrthTorus, SimpleAndGeneralFixSigns) {
  Rng rng(61);
  const CTensor t = random_tensor({2, 2, 2, 2}, rng);
  const auto a = orth_torus_simple(t);
  EXPECT_EQ(group_defect(a.factors), 0.0);
  EXPECT_GT(a.tensor[0].real(), 0.0);
  for (auto v : a.basis.vectors) EXPECT_GT(a.tensor[v].real(), 0.0);
  EXPECT_LT(max_diff(multilinear_apply(t, a.factors.factors), a.tensor), 1e-15);

  const auto b = orth_torus_general(t);
  EXPECT_EQ(sign_s(b.tensor[0]), 0);
  for (auto v : b.basis.vectors) EXPECT_EQ(sign_s(b.tensor[v]), 0);
  EXPECT_LT(max_diff(multilinear_apply(t, b.factors.factors), b.tensor), 1e-15);

  // Sparse support: |000>, |011>, |101>, |110> has F_2 rank 2.
  CTensor s = CTensor::from_kets(3, {{"000", -1.0}, {"011", {-2.0, 1.0}}, {"101", 3.0}, {"110", -I}});
  const auto c = orth_torus_general(s);
  EXPECT_EQ(c.basis.vectors.size(), 2u);
  EXPECT_EQ(sign_s(c.tensor[0]), 0);
  for (auto v : c.basis.vectors) EXPECT_EQ(sign_s(c.tensor[v]), 0);
  EXPECT_EQ(kind_of([] { orth_torus_general(CTensor::from_kets(2, {{"01", 1.0}})); }), ErrorKind::ZeroAtOrigin);
}

TEST(SplitKronecker, RecoversSl2Factors) {
  Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_sl2(rng), b = random_sl2(rng);
    const auto [x, y] = split_kronecker(kron(a, b));
    EXPECT_LT(max_diff(kron(x, y), kron(a, b)), 1e-10 * kron(a, b).frobenius_norm());
    EXPECT_LT(std::abs(det(x) - 1.0), 1e-10);
    EXPECT_LT(std::abs(det(y) - 1.0), 1e-10);
    for (const auto& e : x.entries())
      if (std::abs(e) > 1e-8 * x.max_abs()) {
        EXPECT_EQ(sign_s(e), 0);
        break;
      }
  }
  EXPECT_EQ(kind_of([] { split_kronecker(CMatrix::identity(4) + CMatrix{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}); }),
            ErrorKind::NonFactorizable);
}

TEST(SymmetricNormalizer, AllBranches) {
  Rng rng(63);
  std::vector<CMatrix> cases{
      random_complex_symmetric(2, rng),
      CMatrix{{0.0, 2.0}, {2.0, {1.0, 1.0}}},  // m11 = 0
      CMatrix{{0.0, {0.5, -1.5}}, {{0.5, -1.5}, 0.0}},  // m11 = m22 = 0
      CMatrix{{-1.0, 0.0}, {0.0, -1.0}},
  };
  for (const auto& m : cases) {
    const auto sn = sl2_symmetric_normalizer(m);
    EXPECT_LT(std::abs(det(sn.L) - 1.0), 1e-12);
    EXPECT_LT(std::abs(sn.z - principal_sqrt(det(m))), 1e-12);
    EXPECT_LT(max_diff(sn.L * m * sn.L.transpose(), sn.z * CMatrix::identity(2)), 1e-12 * m.frobenius_norm());
  }
  EXPECT_EQ(kind_of([] { sl2_symmetric_normalizer(CMatrix{{1.0, 1.0}, {1.0, 1.0}}); }), ErrorKind::SingularMatrix);
  EXPECT_EQ(kind_of([] { sl2_symmetric_normalizer(CMatrix{{1.0, 1.0}, {0.0, 1.0}}); }), ErrorKind::NotSymmetric);
}

TEST(Classify3, TableAndTranslates) {
  Rng rng(64);
  for (OrbitClass3 c : {OrbitClass3::GHZ, OrbitClass3::W, OrbitClass3::Bisep12_3, OrbitClass3::Bisep13_2,
                        OrbitClass3::Bisep1_23, OrbitClass3::Separable}) {
    const CTensor rep = class_representative(c);
    const auto got = classify_3qubit(rep);
    EXPECT_EQ(got.label, c) << to_string(c);
    EXPECT_EQ(got.ranks, rank_pattern(c));
    for (int k = 0; k < 5; ++k) EXPECT_EQ(classify_3qubit(multilinear_apply(rep, random_sl2s(3, rng))).label, c);
  }
  EXPECT_EQ(kind_of([] { classify_3qubit(CTensor::qubits(3)); }), ErrorKind::ZeroTensor);
}

TEST(Ghz, RandomTensorsReachCoefficientTimesV1) {
  Rng rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const CTensor t = random_tensor({2, 2, 2}, rng);
    const auto nf = ghz_normal_form(t);
    EXPECT_LT(nf.span_residual, 1e-10);
    EXPECT_LT(nf.certificate.residual, 1e-9);
    EXPECT_LT(group_defect(nf.certificate.factors), 1e-9);
    EXPECT_EQ(sign_s(nf.coefficient), 0);
    EXPECT_TRUE(verify_certificate(t, nf.certificate).ok());
    const auto moved = ghz_normal_form(multilinear_apply(t, random_sl2s(3, rng)));
    EXPECT_LT(std::abs(std::abs(moved.coefficient) - std::abs(nf.coefficient)), 1e-8 * std::abs(nf.coefficient));
  }
}

TEST(Ghz, WClassIsRejected) {
  const CTensor w = class_representative(OrbitClass3::W);
  const ErrorKind k = kind_of([&] { ghz_normal_form(w); });
  EXPECT_NE(k, ErrorKind::InvalidArgument);
}

TEST(SloccEven, RandomFourAndSixQubits) {
  Rng rng(66);
  for (std::size_t n : {4u, 6u}) {
    const CTensor t = random_tensor(std::vector<std::size_t>(n, 2), rng);
    const auto cert = slocc_even(t);
    EXPECT_LT(cert.residual, 1e-8);
    EXPECT_LT(group_defect(cert.factors), 1e-8);
    const auto rep = verify_certificate(t, cert);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
    const CTensor moved = multilinear_apply(t, random_sl2s(n, rng));
    EXPECT_LT(relative_max_diff(slocc_even(moved).core, cert.core), 1e-6);
  }
}

TEST(SloccEven, MatrixMultiplicationTensorIsNonGeneric) {
  CTensor phi = CTensor::qubits(6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) phi[(i << 5) | (k << 4) | (i << 3) | (j << 2) | (j << 1) | k] = 1.0;
  for (std::size_t p = 0; p < 3; ++p)
    EXPECT_LT(max_diff(pi_pair(phi, 2 * p, 2 * p + 1).matrix, 2.0 * CMatrix::identity(4)), 1e-12);
  EXPECT_EQ(kind_of([&] { slocc_even(phi); }), ErrorKind::RepeatedEigenvalues);
}

TEST(SloccOdd, WitnessAndRandomTensors) {
  const CTensor w = genericity_witness(5);
  for (std::size_t m = 0; m < 5; ++m) {
    EXPECT_LT(max_diff(pi_slocc(w, m).matrix, -8.0 * CMatrix::identity(2)), 1e-12);
    EXPECT_LT(max_diff(pi_symmetric(w, m).matrix, CMatrix::diagonal(std::vector<cplx>{56.0, 8.0})), 1e-12);
  }
  const auto cw = slocc_odd(w);
  EXPECT_LT(cw.residual, 1e-8);
  EXPECT_TRUE(verify_certificate(w, cw).ok());

  Rng rng(67);
  const CTensor t = random_tensor(std::vector<std::size_t>(5, 2), rng);
  const auto cert = slocc_odd(t);
  EXPECT_LT(cert.residual, 1e-8);
  const auto rep = verify_certificate(t, cert);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
  const CTensor moved = multilinear_apply(t, random_sl2s(5, rng));
  EXPECT_LT(relative_max_diff(slocc_odd(moved).core, cert.core), 1e-6);
  EXPECT_THROW(genericity_witness(4), Error);
}

TEST(SloccDispatch, RoutesByQubitCount) {
  Rng rng(68);
  EXPECT_EQ(slocc_normal_form(random_tensor({2, 2, 2}, rng)).orbit_class, std::optional<std::string>("GHZ"));
  EXPECT_EQ(kind_of([&] { slocc_normal_form(random_tensor({2, 2}, rng)); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { slocc_normal_form(random_tensor({3, 2, 2}, rng)); }), ErrorKind::InvalidArgument);
}
