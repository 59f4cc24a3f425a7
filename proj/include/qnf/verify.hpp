#pragma once

#include <string>
#include <vector>

#include "qnf/hosvd.hpp"
#include "qnf/tensor.hpp"

namespace qnf {

struct VerifyReport {
  double residual = 0.0;
  double group_defect = 0.0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// Off-diagonal Frobenius mass of core_(i) core_(i)^* (or ^T when `bilinear`).
double offdiagonal_mass(const CTensor& core, std::size_t mode, bool bilinear);

// Recomputes the reconstruction residual and the factor relations, then checks
// the core structure expected for cert.group:
//   hosvd / lu   Gram matrices diagonal with decreasing real diagonals
//   ohosvd       symmetric Grams diagonal with lex decreasing diagonals
//   lu           additionally origin and basis entries real positive
//   slocc        n = 3: core proportional to v1; even n: pair Grams of the
//                T-transformed core diagonal; odd n: pi_i(core) scalar and
//                symmetric Grams diagonal
VerifyReport verify_certificate(const CTensor& input, const NormalFormCertificate& cert, double tol = kDefaultTol);

}  // namespace qnf
