#include "qnf/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "qnf/error.hpp"
#include "qnf/kernels.hpp"

namespace qnf {

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, "matrix entry count does not match its shape");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t d) {
  CMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

std::vector<cplx> CMatrix::column(std::size_t c) const {
  std::vector<cplx> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

CMatrix CMatrix::adjoint() const {
  CMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

CMatrix CMatrix::conj() const {
  CMatrix t = *this;
  for (auto& z : t.entries_) z = std::conj(z);
  return t;
}

double CMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

cplx CMatrix::trace() const {
  require(is_square(), "trace of a non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) noexcept {
  for (auto& z : entries_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require(a.cols() == b.rows(), "matrix product shape mismatch");
  CMatrix c(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx s = a(r, k);
      if (s != cplx{}) kernels::axpy(s, b.row(k).data(), c.row(r).data(), b.cols());
    }
  }
  return c;
}

std::vector<cplx> operator*(const CMatrix& a, std::span<const cplx> x) {
  require(a.cols() == x.size(), "matrix-vector shape mismatch");
  std::vector<cplx> y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) y[r] = kernels::dotu(a.row(r).data(), x.data(), x.size());
  return y;
}

CMatrix mul_transpose(const CMatrix& a, const CMatrix& b) {
  require(a.cols() == b.cols(), "A*B^T shape mismatch");
  CMatrix c(a.rows(), b.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t s = 0; s < b.rows(); ++s) c(r, s) = kernels::dotu(a.row(r).data(), b.row(s).data(), a.cols());
  return c;
}

CMatrix gram_hermitian(const CMatrix& a) {
  CMatrix c(a.rows(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t s = r; s < a.rows(); ++s) {
      // (A A^*)_{rs} = sum_k A_rk conj(A_sk)
      const cplx v = kernels::dotc(a.row(s).data(), a.row(r).data(), a.cols());
      c(r, s) = v;
      c(s, r) = std::conj(v);
    }
    c(r, r) = c(r, r).real();
  }
  return c;
}

cplx det(const CMatrix& a) {
  require(a.is_square(), "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1.0;
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  CMatrix lu = a;
  cplx d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(lu(r, k)) > std::abs(lu(piv, k))) piv = r;
    if (lu(piv, k) == cplx{}) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
      d = -d;
    }
    d *= lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx f = lu(r, k) / lu(k, k);
      for (std::size_t c = k; c < n; ++c) lu(r, c) -= f * lu(k, c);
    }
  }
  return d;
}

CMatrix inverse(const CMatrix& a) {
  require(a.is_square(), "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  CMatrix work = a;
  CMatrix inv = CMatrix::identity(n);
  const double scale = std::max(a.max_abs(), std::numeric_limits<double>::min());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(work(r, k)) > std::abs(work(piv, k))) piv = r;
    if (std::abs(work(piv, k)) <= 1e3 * std::numeric_limits<double>::epsilon() * scale)
      throw Error(ErrorKind::SingularMatrix, "matrix is numerically singular");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(k, c), work(piv, c));
        std::swap(inv(k, c), inv(piv, c));
      }
    }
    const cplx p = work(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      work(k, c) /= p;
      inv(k, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const cplx f = work(r, k);
      if (f == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

CMatrix matrix_power(const CMatrix& a, unsigned k) {
  require(a.is_square(), "power of a non-square matrix");
  CMatrix p = CMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) p = p * a;
  return p;
}

std::vector<double> singular_values(const CMatrix& a) {
  // One-sided Jacobi on the columns of the taller orientation.
  CMatrix w = a.cols() > a.rows() ? a.adjoint() : a;
  const std::size_t m = w.rows(), n = w.cols();
  CMatrix cols = w.transpose();  // row j holds column j of w
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cplx* ap = cols.row(p).data();
        cplx* aq = cols.row(q).data();
        const double alpha = kernels::dotc(ap, ap, m).real();
        const double beta = kernels::dotc(aq, aq, m).real();
        const cplx gamma = kernels::dotc(ap, aq, m);
        const double g = std::abs(gamma);
        if (g <= eps * std::sqrt(alpha * beta) || g == 0.0) continue;
        rotated = true;
        const cplx e = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const cplx x = ap[k];
          const cplx y = aq[k] * std::conj(e);
          ap[k] = c * x - s * y;
          aq[k] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = cols.row(j).empty() ? 0.0 : std::sqrt(kernels::dotc(cols.row(j).data(), cols.row(j).data(), m).real());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  sv.resize(std::min(a.rows(), a.cols()));
  return sv;
}

std::size_t numerical_rank(const CMatrix& a, double tol) {
  const auto sv = singular_values(a);
  if (sv.empty()) return 0;
  const double threshold = tol * std::max(1.0, sv.front());
  return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > threshold; }));
}

// Normalizes a negative zero imaginary part so the branch cut sits on the
// positive-argument side, keeping arg in (-pi, pi].
static cplx canonical_zero(cplx z) {
  if (z.imag() == 0.0) return {z.real(), 0.0};
  return z;
}

cplx principal_sqrt(cplx z) { return std::sqrt(canonical_zero(z)); }

cplx principal_root4(cplx z) { return std::sqrt(principal_sqrt(z)); }

CMatrix mat_T() {
  const double h = 1.0 / std::numbers::sqrt2;
  const cplx i{0.0, 1.0};
  return CMatrix{{h, 0.0, 0.0, h}, {0.0, h * i, h * i, 0.0}, {0.0, -h, h, 0.0}, {h * i, 0.0, 0.0, -h * i}};
}

CMatrix mat_J() { return CMatrix{{0.0, 1.0}, {-1.0, 0.0}}; }

CMatrix mat_K() {
  const cplx i{0.0, 1.0};
  return CMatrix{{0.0, i}, {i, 0.0}};
}

CMatrix mat_Z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

CMatrix special_matrix(std::string_view name, std::size_t d) {
  if (name == "T") return mat_T();
  if (name == "J") return mat_J();
  if (name == "K") return mat_K();
  if (name == "Z") return mat_Z();
  if (!name.empty() && name.front() == 'I') {
    std::string_view rest = name.substr(1);
    if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
    if (!rest.empty()) {
      if (!std::all_of(rest.begin(), rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw Error(ErrorKind::InvalidArgument, "unknown special matrix '" + std::string(name) + "'");
      d = std::stoul(std::string(rest));
    }
    require(d >= 1, "identity dimension must be positive");
    return CMatrix::identity(d);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown special matrix '" + std::string(name) + "'");
}

CMatrix symmetrized_jordan_block(std::size_t k, cplx lambda) {
  require(k >= 1, "Jordan block size must be positive");
  const cplx i{0.0, 1.0};
  CMatrix s(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    s(r, r) = lambda;
    if (r + 1 < k) s(r, r + 1) = s(r + 1, r) = 1.0;
  }
  // Imaginary part: +1 on the anti-diagonal r+c = k-2, -1 on r+c = k.
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (r + c + 2 == k) s(r, c) += i;
      if (r + c == k) s(r, c) -= i;
    }
  }
  return s;
}

std::vector<CMatrix> jordan_stabilizer_basis(std::size_t k) {
  require(k >= 1, "Jordan block size must be positive");
  const CMatrix nil = symmetrized_jordan_block(k, 0.0);
  std::vector<CMatrix> basis;
  basis.reserve(k);
  basis.push_back(CMatrix::identity(k));
  for (std::size_t p = 1; p < k; ++p) basis.push_back(basis.back() * nil);
  return basis;
}

double min_gap(std::span<const cplx> values) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b) gap = std::min(gap, std::abs(values[a] - values[b]));
  return gap;
}

}  // namespace qnf
