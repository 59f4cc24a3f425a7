#include "qnf/reductions.hpp"

#include <bit>

#include "qnf/error.hpp"

namespace qnf {

CMatrix apply_j_power(const CMatrix& m) {
  const std::size_t cols = m.cols();
  require(std::has_single_bit(cols), "column count must be a power of two");
  const std::size_t mask = cols - 1;
  CMatrix out(m.rows(), cols);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t w = 0; w < cols; ++w) {
      const cplx v = m(r, mask & ~w);
      out(r, w) = (std::popcount(w) & 1U) ? -v : v;
    }
  return out;
}

ReductionImage pi_hermitian(const CTensor& t, std::size_t mode) {
  return {gram_hermitian(flatten(t, mode)), ReductionKind::Hermitian, {mode}};
}

ReductionImage pi_symmetric(const CTensor& t, std::size_t mode) {
  const CMatrix f = flatten(t, mode);
  return {mul_transpose(f, f), ReductionKind::Symmetric, {mode}};
}

ReductionImage pi_slocc(const CTensor& t, std::size_t mode) {
  require(t.is_qubit() && t.order() >= 2, "SLOCC reduction needs a qubit tensor with n >= 2");
  const CMatrix f = flatten(t, mode);
  return {mul_transpose(f, apply_j_power(f)), ReductionKind::Slocc2, {mode}};
}

ReductionImage pi_pair(const CTensor& t, std::size_t i, std::size_t j) {
  require(i < j, "pair reduction needs i < j");
  const CMatrix f = flatten_pair(t, i, j);
  const CMatrix tm = mat_T();
  const CMatrix inner = mul_transpose(f, apply_j_power(f));
  return {mul_transpose(tm * inner, tm), ReductionKind::SloccPair, {i, j}};
}

cplx slocc_invariant_det(const CTensor& t, std::size_t mode) { return det(pi_slocc(t, mode).matrix); }

}  // namespace qnf
