#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnf/linalg.hpp"
#include "qnf/tensor.hpp"

namespace qnf {

enum class GroupTag { Unitary, SpecialOrthogonal, SL2, DiagonalTorus, SignTorus };

std::string_view to_string(GroupTag tag) noexcept;
GroupTag group_tag_from_string(std::string_view name);

struct GroupFactorList {
  GroupTag tag = GroupTag::Unitary;
  std::vector<CMatrix> factors;
};

// Largest violation of the tag's defining relation over all factors:
// U^*U = I, U^T U = I with det 1, det 1, diagonal unitary, diagonal +-1.
double group_defect(const GroupFactorList& g);

// input = (g_1 (x) ... (x) g_n) core.
struct NormalFormCertificate {
  CTensor core;
  GroupFactorList factors;
  std::string group;
  double residual = 0.0;
  // Minimum eigenvalue gap of the reduction image, one entry per mode (or pair).
  std::vector<double> gaps;
  // Phase-fixing basis from the torus step, as linear indices.
  std::vector<std::size_t> basis;
  std::optional<cplx> coefficient;
  std::optional<std::string> orbit_class;
};

// ||input - g.core|| / ||input||, or the absolute error for a zero input.
double reconstruction_residual(const CTensor& input, const CTensor& core, const GroupFactorList& g);

// Unitary factors with every core Gram matrix real diagonal, decreasing.
NormalFormCertificate hosvd_core(const CTensor& t, double tol = kDefaultTol);

// Special orthogonal factors with every core t_(i) t_(i)^T diagonal, lex decreasing.
NormalFormCertificate ohosvd_core(const CTensor& t, double tol = kDefaultTol);

}  // namespace qnf
