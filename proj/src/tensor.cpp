#include "qnf/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "qnf/error.hpp"
#include "qnf/kernels.hpp"

namespace qnf {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void check_mode(const CTensor& t, std::size_t mode) {
  if (mode >= t.order())
    throw Error(ErrorKind::InvalidArgument, "mode " + std::to_string(mode + 1) + " out of range");
}

}  // namespace

CTensor::CTensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  require(!dims_.empty(), "tensor needs at least one mode");
  for (auto d : dims_) require(d > 0, "tensor dimensions must be positive");
  entries_.assign(product(dims_), cplx{});
}

CTensor::CTensor(std::vector<std::size_t> dims, std::vector<cplx> entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  require(!dims_.empty(), "tensor needs at least one mode");
  for (auto d : dims_) require(d > 0, "tensor dimensions must be positive");
  require(entries_.size() == product(dims_), "entry count does not match dimensions");
  for (const auto& z : entries_)
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "tensor has non-finite entries");
}

CTensor CTensor::qubits(std::size_t n) { return CTensor(std::vector<std::size_t>(n, 2)); }

CTensor CTensor::from_kets(std::size_t n, std::initializer_list<std::pair<std::string_view, cplx>> terms) {
  CTensor t = qubits(n);
  for (const auto& [bits, c] : terms) t.at(bits) += c;
  return t;
}

bool CTensor::is_qubit() const noexcept {
  return !dims_.empty() && std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 2; });
}

cplx& CTensor::at(std::string_view bits) {
  require(is_qubit() && bits.size() == order(), "bitstring does not match a qubit tensor of this order");
  return entries_[parse_bitstring(bits)];
}

const cplx& CTensor::at(std::string_view bits) const {
  require(is_qubit() && bits.size() == order(), "bitstring does not match a qubit tensor of this order");
  return entries_[parse_bitstring(bits)];
}

double CTensor::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double CTensor::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

CTensor& CTensor::operator*=(cplx s) noexcept {
  for (auto& z : entries_) z *= s;
  return *this;
}

CTensor& CTensor::operator+=(const CTensor& other) {
  require(dims_ == other.dims_, "tensor dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

CTensor& CTensor::operator-=(const CTensor& other) {
  require(dims_ == other.dims_, "tensor dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

CTensor operator*(cplx s, CTensor t) { return t *= s; }
CTensor operator+(CTensor a, const CTensor& b) { return a += b; }
CTensor operator-(CTensor a, const CTensor& b) { return a -= b; }

double relative_max_diff(const CTensor& a, const CTensor& b) {
  require(a.dims() == b.dims(), "tensor dimension mismatch");
  const double scale = std::max(a.max_abs(), b.max_abs());
  if (scale == 0.0) return 0.0;
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m / scale;
}

std::string bitstring(std::size_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t k = 0; k < n; ++k)
    if (qubit_bit(index, n, k)) s[k] = '1';
  return s;
}

std::size_t parse_bitstring(std::string_view bits) {
  require(!bits.empty() && bits.size() < 64, "bitstring length out of range");
  std::size_t v = 0;
  for (char c : bits) {
    require(c == '0' || c == '1', "bitstring may only contain 0 and 1");
    v = (v << 1) | static_cast<std::size_t>(c - '0');
  }
  return v;
}

CMatrix flatten(const CTensor& t, std::size_t mode) {
  check_mode(t, mode);
  const auto& dims = t.dims();
  const std::size_t d = dims[mode];
  const std::size_t outer = product(std::span(dims).first(mode));
  const std::size_t inner = product(std::span(dims).subspan(mode + 1));
  CMatrix m(d, outer * inner);
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t r = 0; r < d; ++r) {
      const cplx* src = t.data() + (a * d + r) * inner;
      std::copy(src, src + inner, m.row(r).data() + a * inner);
    }
  return m;
}

CTensor unflatten(const CMatrix& m, std::vector<std::size_t> dims, std::size_t mode) {
  require(mode < dims.size(), "mode out of range");
  const std::size_t d = dims[mode];
  const std::size_t outer = product(std::span(dims).first(mode));
  const std::size_t inner = product(std::span(dims).subspan(mode + 1));
  require(m.rows() == d && m.cols() == outer * inner, "flattening shape does not match dimensions");
  CTensor t(std::move(dims));
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t r = 0; r < d; ++r) {
      const cplx* src = m.row(r).data() + a * inner;
      std::copy(src, src + inner, t.data() + (a * d + r) * inner);
    }
  return t;
}

CMatrix flatten_pair(const CTensor& t, std::size_t i, std::size_t j) {
  require(t.is_qubit(), "pair flattening needs a qubit tensor");
  const std::size_t n = t.order();
  require(n >= 3, "pair flattening needs at least 3 qubits");
  require(i < n && j < n, "mode out of range");
  require(i != j, "pair flattening needs two distinct modes");
  CMatrix m(4, std::size_t{1} << (n - 2));
  for (std::size_t v = 0; v < t.size(); ++v) {
    std::size_t col = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i && k != j) col = (col << 1) | qubit_bit(v, n, k);
    m(2 * qubit_bit(v, n, i) + qubit_bit(v, n, j), col) = t[v];
  }
  return m;
}

CTensor apply_mode(const CTensor& t, std::size_t mode, const CMatrix& g) {
  check_mode(t, mode);
  const auto& dims = t.dims();
  const std::size_t d = dims[mode];
  require(g.cols() == d, "factor size does not match mode dimension");
  const std::size_t r_out = g.rows();
  const std::size_t outer = product(std::span(dims).first(mode));
  const std::size_t inner = product(std::span(dims).subspan(mode + 1));
  std::vector<std::size_t> out_dims = dims;
  out_dims[mode] = r_out;
  CTensor out(out_dims);
  if (inner == 1) {
    // Last mode: each output entry is a row of g against a contiguous fibre.
    for (std::size_t a = 0; a < outer; ++a)
      for (std::size_t r = 0; r < r_out; ++r)
        out[a * r_out + r] = kernels::dotu(g.row(r).data(), t.data() + a * d, d);
    return out;
  }
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t r = 0; r < r_out; ++r) {
      cplx* dst = out.data() + (a * r_out + r) * inner;
      for (std::size_t c = 0; c < d; ++c) {
        const cplx w = g(r, c);
        if (w != cplx{}) kernels::axpy(w, t.data() + (a * d + c) * inner, dst, inner);
      }
    }
  return out;
}

CTensor multilinear_apply(const CTensor& t, std::span<const CMatrix> factors) {
  require(factors.size() == t.order(), "need one factor per mode");
  for (std::size_t k = 0; k < factors.size(); ++k)
    require(factors[k].is_square() && factors[k].rows() == t.dims()[k],
            "factor " + std::to_string(k + 1) + " does not match its mode dimension");
  CTensor out = t;
  for (std::size_t k = 0; k < factors.size(); ++k) out = apply_mode(out, k, factors[k]);
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx s = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return out;
}

CMatrix kron(std::span<const CMatrix> ms) {
  require(!ms.empty(), "Kronecker product of an empty list");
  CMatrix out = ms[0];
  for (std::size_t k = 1; k < ms.size(); ++k) out = kron(out, ms[k]);
  return out;
}

Support support(const CTensor& t, double tol) {
  const double cut = tol * t.max_abs();
  Support s;
  if (t.max_abs() == 0.0) return s;
  for (std::size_t v = 0; v < t.size(); ++v)
    if (std::abs(t[v]) > cut) s.push_back(v);
  return s;
}

CTensor reshape(const CTensor& t, std::vector<std::size_t> dims) {
  return CTensor(std::move(dims), t.entries());
}

}  // namespace qnf
