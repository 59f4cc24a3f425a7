#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnf/linalg.hpp"

namespace qnf {

// Dense n-way complex tensor, row-major with the first mode slowest. For qubit
// tensors the linear index of |v1 v2 ... vn> is the integer with binary digits
// v1 v2 ... vn, so increasing index order is bitstring lex order.
//
// Mode arguments throughout the library are 0-based.
class CTensor {
 public:
  CTensor() = default;
  explicit CTensor(std::vector<std::size_t> dims);
  CTensor(std::vector<std::size_t> dims, std::vector<cplx> entries);

  static CTensor qubits(std::size_t n);
  // Sum of c|v> over the given (bitstring, coefficient) terms.
  static CTensor from_kets(std::size_t n, std::initializer_list<std::pair<std::string_view, cplx>> terms);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t order() const noexcept { return dims_.size(); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_qubit() const noexcept;

  cplx& operator[](std::size_t idx) noexcept { return entries_[idx]; }
  const cplx& operator[](std::size_t idx) const noexcept { return entries_[idx]; }
  cplx& at(std::string_view bits);
  const cplx& at(std::string_view bits) const;

  const std::vector<cplx>& entries() const noexcept { return entries_; }
  cplx* data() noexcept { return entries_.data(); }
  const cplx* data() const noexcept { return entries_.data(); }

  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;

  CTensor& operator*=(cplx s) noexcept;
  CTensor& operator+=(const CTensor& other);
  CTensor& operator-=(const CTensor& other);

  friend bool operator==(const CTensor&, const CTensor&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<cplx> entries_;
};

CTensor operator*(cplx s, CTensor t);
CTensor operator+(CTensor a, const CTensor& b);
CTensor operator-(CTensor a, const CTensor& b);

// max_v |a_v - b_v| / max(max|a|, max|b|), 0 for two zero tensors.
double relative_max_diff(const CTensor& a, const CTensor& b);

std::string bitstring(std::size_t index, std::size_t n);
std::size_t parse_bitstring(std::string_view bits);
// Value of qubit `mode` in the bitstring with the given index.
inline unsigned qubit_bit(std::size_t index, std::size_t n, std::size_t mode) noexcept {
  return static_cast<unsigned>((index >> (n - 1 - mode)) & 1U);
}

// d_i x prod_{j != i} d_j; columns run over the other modes in increasing
// order, earlier mode slowest.
CMatrix flatten(const CTensor& t, std::size_t mode);
CTensor unflatten(const CMatrix& m, std::vector<std::size_t> dims, std::size_t mode);

// 4 x 2^(n-2) flattening of a qubit tensor; row index is 2*v_i + v_j.
CMatrix flatten_pair(const CTensor& t, std::size_t i, std::size_t j);

// Factor-wise group action (g_1 (x) ... (x) g_n) t.
CTensor apply_mode(const CTensor& t, std::size_t mode, const CMatrix& g);
CTensor multilinear_apply(const CTensor& t, std::span<const CMatrix> factors);

// Left-to-right Kronecker product.
CMatrix kron(std::span<const CMatrix> ms);
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Linear indices v with |t_v| > tol * max|t|, increasing. Empty for zero t.
using Support = std::vector<std::size_t>;
Support support(const CTensor& t, double tol = kDefaultTol);

// Reinterpret the entries under new dimensions with the same total size.
CTensor reshape(const CTensor& t, std::vector<std::size_t> dims);

}  // namespace qnf
