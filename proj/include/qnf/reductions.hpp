#pragma once

#include <cstddef>
#include <vector>

#include "qnf/linalg.hpp"
#include "qnf/tensor.hpp"

namespace qnf {

enum class ReductionKind { Hermitian, Symmetric, Slocc2, SloccPair };

struct ReductionImage {
  CMatrix matrix;
  ReductionKind kind;
  std::vector<std::size_t> modes;
};

// t_(i) t_(i)^*
ReductionImage pi_hermitian(const CTensor& t, std::size_t mode);
// t_(i) t_(i)^T
ReductionImage pi_symmetric(const CTensor& t, std::size_t mode);
// t_(i) J^{(x)(n-1)} t_(i)^T, 2x2, for qubit tensors with n >= 2.
ReductionImage pi_slocc(const CTensor& t, std::size_t mode);
// T t_(ij) J^{(x)(n-2)} t_(ij)^T T^T, 4x4, for qubit tensors with n >= 3.
ReductionImage pi_pair(const CTensor& t, std::size_t i, std::size_t j);

// det(pi_slocc(t, mode)); an SL_2^n invariant for odd n.
cplx slocc_invariant_det(const CTensor& t, std::size_t mode);

// m (J^{(x)k})^T, computed as out(r, w) = (-1)^{|w|} m(r, ~w); cols = 2^k.
// With Y = apply_j_power(m), a J^{(x)k} m^T = mul_transpose(a, Y).
CMatrix apply_j_power(const CMatrix& m);

}  // namespace qnf
