#pragma once

#include <vector>

#include "qnf/hosvd.hpp"
#include "qnf/tensor.hpp"

namespace qnf {

enum class Field { Real, F2 };

// Bitstrings (as linear indices) chosen greedily in lex order.
struct PhaseBasis {
  std::vector<std::size_t> vectors;
  Field field = Field::Real;
};

// Greedy lex-order basis of the span of support \ {0} over the given field.
PhaseBasis phase_basis(const Support& supp, std::size_t n, Field field);

// Result of a torus step: out = (h_1 (x) ... (x) h_n) in, with any global
// scalar folded into h_1.
struct TorusResult {
  CTensor tensor;
  GroupFactorList factors;
  PhaseBasis basis;
};

// Phase normal form when the origin and every unit bitstring are in the support.
TorusResult torus_normal_simple(const CTensor& omega, double tol = kDefaultTol);

enum class KrausSolver {
  MinimumNorm,  // t^T = V (V^T V)^{-1} (-theta)
  Pivoted,      // square solve on pivot coordinates, other t_i = 0
};

// Phase normal form for any support containing the origin.
TorusResult kraus_normal(const CTensor& omega, double tol = kDefaultTol,
                         KrausSolver solver = KrausSolver::MinimumNorm);

// HOSVD core followed by the Kraus phase normal form.
NormalFormCertificate lu_normal_form(const CTensor& t, double tol = kDefaultTol);

}  // namespace qnf
