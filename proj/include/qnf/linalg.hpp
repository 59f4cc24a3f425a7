#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace qnf {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-8;

// Dense complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t d);
  static CMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }

  std::span<const cplx> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }
  std::span<cplx> row(std::size_t r) noexcept { return {entries_.data() + r * cols_, cols_}; }
  std::vector<cplx> column(std::size_t c) const;

  const std::vector<cplx>& entries() const noexcept { return entries_; }
  const cplx* data() const noexcept { return entries_.data(); }
  cplx* data() noexcept { return entries_.data(); }

  CMatrix transpose() const;
  CMatrix adjoint() const;
  CMatrix conj() const;

  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;
  cplx trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s) noexcept;

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
std::vector<cplx> operator*(const CMatrix& a, std::span<const cplx> x);

// A * B^T and A * A^*, computed row against row.
CMatrix mul_transpose(const CMatrix& a, const CMatrix& b);
CMatrix gram_hermitian(const CMatrix& a);

cplx det(const CMatrix& a);
CMatrix inverse(const CMatrix& a);
CMatrix matrix_power(const CMatrix& a, unsigned k);

// Singular values in decreasing order (one-sided Jacobi).
std::vector<double> singular_values(const CMatrix& a);
// Number of singular values above tol * max(1, sigma_max).
std::size_t numerical_rank(const CMatrix& a, double tol = kDefaultTol);

// Lexicographic order on C: real part first, then imaginary part.
constexpr bool lex_less(cplx a, cplx b) noexcept {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

struct LexLess {
  constexpr bool operator()(cplx a, cplx b) const noexcept { return lex_less(a, b); }
};

// Principal branches, argument in (-pi, pi].
cplx principal_sqrt(cplx z);
cplx principal_root4(cplx z);

// The fixed matrices T (4x4, unitary, T^T T = J (x) J), J, K, Z and I_d.
// `name` is one of "T", "J", "K", "Z", "I" / "I_<d>"; d is used for plain "I".
CMatrix special_matrix(std::string_view name, std::size_t d = 2);
CMatrix mat_T();
CMatrix mat_J();
CMatrix mat_K();
CMatrix mat_Z();

// S_k(lambda): complex symmetric, similar to the k x k Jordan block J_k(lambda).
CMatrix symmetrized_jordan_block(std::size_t k, cplx lambda);

// [I_k, S_k(0), S_k(0)^2, ..., S_k(0)^(k-1)], a basis of the GL_k-centralizer of S_k(lambda).
std::vector<CMatrix> jordan_stabilizer_basis(std::size_t k);

// General complex eigendecomposition (Hessenberg reduction + shifted QR).
// Eigenvectors are unit columns, phase-fixed so the largest-magnitude
// component is real positive. Order is the Schur order, not sorted.
struct EigenDecomposition {
  std::vector<cplx> values;
  CMatrix vectors;
};
EigenDecomposition eig_general(const CMatrix& a);

// Hermitian eigendecomposition (cyclic Jacobi); values real and decreasing,
// vectors orthonormal and phase-fixed.
struct HermitianEigen {
  std::vector<double> values;
  CMatrix vectors;
};
HermitianEigen eig_hermitian(const CMatrix& a);

// Eigenpairs of a complex symmetric matrix, values weakly decreasing in lex order.
EigenDecomposition eig_complex_symmetric(const CMatrix& a, double tol = kDefaultTol);

// A = U D U^T with U in SO_d and D diagonal, lex-decreasing. Requires distinct eigenvalues.
struct OrthogonalSpectral {
  CMatrix U;
  CMatrix D;
};
OrthogonalSpectral orthogonal_spectral(const CMatrix& a, double tol = kDefaultTol);

// Smallest pairwise |lambda_i - lambda_j|; +inf for fewer than two values.
double min_gap(std::span<const cplx> values);

}  // namespace qnf
