#include "qnf/rng.hpp"

#include <cmath>
#include <numbers>

namespace qnf {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

CTensor random_tensor(std::vector<std::size_t> dims, Rng& rng) {
  CTensor t(std::move(dims));
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = rng.complex_normal();
  return t;
}

CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.complex_normal();
  return m;
}

CMatrix random_unitary(std::size_t d, Rng& rng) {
  CMatrix q = random_matrix(d, d, rng);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < d; ++r) s += std::conj(q(r, p)) * q(r, c);
      for (std::size_t r = 0; r < d; ++r) q(r, c) -= s * q(r, p);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < d; ++r) nrm += std::norm(q(r, c));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < d; ++r) q(r, c) /= nrm;
  }
  return q;
}

CMatrix random_sl2(Rng& rng) {
  for (;;) {
    CMatrix m = random_matrix(2, 2, rng);
    const cplx d = det(m);
    if (std::abs(d) < 1e-6) continue;
    m *= 1.0 / principal_sqrt(d);
    return m;
  }
}

CMatrix random_special_orthogonal(std::size_t d, Rng& rng) {
  CMatrix q = CMatrix::identity(d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t r = p + 1; r < d; ++r) {
      const cplx z = rng.complex_normal();
      const cplx c = std::cos(z), s = std::sin(z);
      for (std::size_t k = 0; k < d; ++k) {
        const cplx x = q(p, k), y = q(r, k);
        q(p, k) = c * x - s * y;
        q(r, k) = s * x + c * y;
      }
    }
  return q;
}

CMatrix random_complex_symmetric(std::size_t d, Rng& rng) {
  const CMatrix g = random_matrix(d, d, rng);
  return g + g.transpose();
}

}  // namespace qnf
