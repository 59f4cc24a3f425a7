#pragma once

#include <array>
#include <string_view>

#include "qnf/hosvd.hpp"
#include "qnf/lu_nf.hpp"
#include "qnf/tensor.hpp"

namespace qnf {

// 0 for Re z > 0 or (Re z = 0 and Im z > 0), 1 for the mirror half plane.
int sign_s(cplx z);

// Sign normal form when the origin and every unit bitstring have nonzero real part.
TorusResult orth_torus_simple(const CTensor& omega, double tol = kDefaultTol);

// Sign normal form over an F_2 basis of the support; needs a nonzero origin entry.
TorusResult orth_torus_general(const CTensor& omega, double tol = kDefaultTol);

// Split a 4x4 matrix of the form A (x) B with det A = det B = 1. A is scaled
// by +-1 so that its first nonzero entry has sign_s = 0.
std::pair<CMatrix, CMatrix> split_kronecker(const CMatrix& p, double tol = kDefaultTol);

// Even n >= 4; qubits paired (1,2), (3,4), ...
NormalFormCertificate slocc_even(const CTensor& t, double tol = kDefaultTol);

// L in SL_2 with L M L^T = z I, z the principal square root of det M.
struct SymmetricNormalizer {
  CMatrix L;
  cplx z;
};
SymmetricNormalizer sl2_symmetric_normalizer(const CMatrix& m, double tol = kDefaultTol);

// Odd n >= 5.
NormalFormCertificate slocc_odd(const CTensor& t, double tol = kDefaultTol);

// (1 - 2^(2k-1))|0...0> + sum of |v> over nonzero even-weight v, n = 2k+1 >= 5.
CTensor genericity_witness(std::size_t n);

enum class OrbitClass3 { GHZ, W, Bisep12_3, Bisep13_2, Bisep1_23, Separable };

std::string_view to_string(OrbitClass3 c) noexcept;
std::array<int, 3> rank_pattern(OrbitClass3 c) noexcept;
// Representative of each class: |000>+|111>, |001>+|010>+|100>, |001>+|111>, ...
CTensor class_representative(OrbitClass3 c);

struct Classification3 {
  OrbitClass3 label;
  std::array<int, 3> ranks;
};
Classification3 classify_3qubit(const CTensor& t, double tol = kDefaultTol);

// v1 = |001>+|010>+|100>-|111>, v2 = |101>+|110>-|000>+|011>.
CTensor ghz_v1();
CTensor ghz_v2();

// t is SLOCC equivalent to coefficient * v1 with sign_s(coefficient) = 0.
struct GhzNormalForm {
  cplx coefficient;
  NormalFormCertificate certificate;
  // ||psi - a v1 - b v2|| / ||psi|| after the symmetric normalization.
  double span_residual = 0.0;
};
GhzNormalForm ghz_normal_form(const CTensor& t, double tol = kDefaultTol);

// Routes by qubit count: n = 3 to ghz_normal_form, even n >= 4 to slocc_even,
// odd n >= 5 to slocc_odd.
NormalFormCertificate slocc_normal_form(const CTensor& t, double tol = kDefaultTol);

}  // namespace qnf
