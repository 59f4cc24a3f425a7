// Eigensolvers: complex Schur via Hessenberg + shifted QR, Hermitian Jacobi,
// and the complex-orthogonal spectral factorization built on top of them.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qnf/error.hpp"
#include "qnf/kernels.hpp"
#include "qnf/linalg.hpp"

namespace qnf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Scale the vector to unit 2-norm with its largest-magnitude component real
// positive (first such component on ties).
void phase_fix_unit(std::span<cplx> v) {
  double nrm = 0.0;
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double a = std::abs(v[k]);
    nrm += a * a;
    if (a > best * (1.0 + 1e-12)) {
      best = a;
      arg = k;
    }
  }
  nrm = std::sqrt(nrm);
  if (nrm == 0.0) return;
  const cplx phase = std::conj(v[arg]) / std::abs(v[arg]);
  for (auto& z : v) z *= phase / nrm;
  v[arg] = {std::abs(v[arg]), 0.0};
}

struct Givens {
  double c;
  cplx s;
};

// G = [[c, s], [-conj(s), c]] with G [a; b] = [r; 0].
Givens make_givens(cplx a, cplx b) {
  const double ab = std::abs(b);
  if (ab == 0.0) return {1.0, 0.0};
  const double aa = std::abs(a);
  if (aa == 0.0) return {0.0, std::conj(b) / ab};
  const double rho = std::hypot(aa, ab);
  return {aa / rho, (a / aa) * std::conj(b) / rho};
}

void hessenberg_reduce(CMatrix& h, CMatrix& q) {
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    std::vector<cplx> v(len);
    double xnorm = 0.0;
    for (std::size_t r = 0; r < len; ++r) {
      v[r] = h(k + 1 + r, k);
      xnorm += std::norm(v[r]);
    }
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const cplx phase = std::abs(v[0]) == 0.0 ? cplx{1.0} : v[0] / std::abs(v[0]);
    const cplx alpha = -phase * xnorm;
    v[0] -= alpha;
    double vnorm = 0.0;
    for (const auto& z : v) vnorm += std::norm(z);
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (auto& z : v) z /= vnorm;
    // H <- (I - 2 v v^*) H
    for (std::size_t c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (std::size_t r = 0; r < len; ++r) s += std::conj(v[r]) * h(k + 1 + r, c);
      for (std::size_t r = 0; r < len; ++r) h(k + 1 + r, c) -= 2.0 * v[r] * s;
    }
    // H <- H (I - 2 v v^*), Q <- Q (I - 2 v v^*)
    for (CMatrix* m : {&h, &q}) {
      for (std::size_t r = 0; r < n; ++r) {
        cplx s = 0.0;
        for (std::size_t c = 0; c < len; ++c) s += (*m)(r, k + 1 + c) * v[c];
        for (std::size_t c = 0; c < len; ++c) (*m)(r, k + 1 + c) -= 2.0 * s * std::conj(v[c]);
      }
    }
    for (std::size_t r = 2; r < len + 1; ++r) h(k + r, k) = 0.0;
  }
}

cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half = 0.5 * (a - d);
  const cplx disc = std::sqrt(half * half + b * c);
  const cplx m1 = 0.5 * (a + d) + disc;
  const cplx m2 = 0.5 * (a + d) - disc;
  return std::abs(m1 - d) <= std::abs(m2 - d) ? m1 : m2;
}

// Complex Schur form A = Z T Z^* in place: h becomes T, z accumulates Z.
void schur_qr(CMatrix& h, CMatrix& z) {
  const std::size_t n = h.rows();
  if (n <= 1) return;
  const double anorm = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());
  std::size_t hi = n - 1;
  int iter = 0;
  int total = 0;
  const int max_total = 60 * static_cast<int>(n);
  while (hi > 0) {
    std::size_t lo = hi;
    while (lo > 0) {
      const double off = std::abs(h(lo, lo - 1));
      double scale = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (scale == 0.0) scale = anorm;
      if (off <= kEps * scale) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      --hi;
      iter = 0;
      continue;
    }
    if (++total > max_total) throw Error(ErrorKind::NonConvergence, "QR iteration did not converge");
    ++iter;

    cplx mu;
    if (iter % 11 == 0) {
      // Exceptional shift to break cycles.
      mu = h(hi, hi) + cplx{0.75 * std::abs(h(hi, hi - 1).real()) + std::abs(h(hi, hi - 1)), 0.0};
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    for (std::size_t j = lo; j <= hi; ++j) h(j, j) -= mu;
    std::vector<Givens> rots;
    rots.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      for (std::size_t c = k; c < n; ++c) {
        const cplx x = h(k, c), y = h(k + 1, c);
        h(k, c) = g.c * x + g.s * y;
        h(k + 1, c) = -std::conj(g.s) * x + g.c * y;
      }
      h(k + 1, k) = 0.0;
      rots.push_back(g);
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens& g = rots[k - lo];
      const std::size_t rmax = std::min(k + 2, hi);
      for (std::size_t r = 0; r <= rmax; ++r) {
        const cplx x = h(r, k), y = h(r, k + 1);
        h(r, k) = g.c * x + std::conj(g.s) * y;
        h(r, k + 1) = -g.s * x + g.c * y;
      }
      for (std::size_t r = 0; r < n; ++r) {
        const cplx x = z(r, k), y = z(r, k + 1);
        z(r, k) = g.c * x + std::conj(g.s) * y;
        z(r, k + 1) = -g.s * x + g.c * y;
      }
    }
    for (std::size_t j = lo; j <= hi; ++j) h(j, j) += mu;
  }
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) h(r, c) = 0.0;
}

}  // namespace

EigenDecomposition eig_general(const CMatrix& a) {
  require(a.is_square(), "eigendecomposition of a non-square matrix");
  const std::size_t n = a.rows();
  for (const auto& v : a.entries())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");
  CMatrix t = a;
  CMatrix z = CMatrix::identity(n);
  hessenberg_reduce(t, z);
  schur_qr(t, z);

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  const double tiny = kEps * std::max(t.frobenius_norm(), std::numeric_limits<double>::min());
  for (std::size_t k = 0; k < n; ++k) {
    const cplx lambda = t(k, k);
    out.values[k] = lambda;
    std::vector<cplx> y(n, 0.0);
    y[k] = 1.0;
    for (std::size_t jj = k; jj-- > 0;) {
      cplx s = 0.0;
      for (std::size_t m = jj + 1; m <= k; ++m) s += t(jj, m) * y[m];
      cplx den = t(jj, jj) - lambda;
      if (std::abs(den) < tiny) den = tiny;
      y[jj] = -s / den;
    }
    std::vector<cplx> v = z * std::span<const cplx>(y);
    phase_fix_unit(v);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v[r];
  }
  return out;
}

HermitianEigen eig_hermitian(const CMatrix& input) {
  require(input.is_square(), "eigendecomposition of a non-square matrix");
  const std::size_t n = input.rows();
  CMatrix a = input;
  CMatrix v = CMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double g = std::abs(apq);
        const double app = a(p, p).real(), aqq = a(q, q).real();
        if (g == 0.0 || g <= 0.5 * kEps * std::sqrt(std::abs(app * aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        converged = false;
        const cplx e = apq / g;
        const double zeta = (aqq - app) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx ce = std::conj(e);
        // A <- A U with U[:,p] = c e_p - s conj(e) e_q, U[:,q] = s e_p + c conj(e) e_q
        for (std::size_t r = 0; r < n; ++r) {
          const cplx x = a(r, p), y = a(r, q);
          a(r, p) = c * x - s * ce * y;
          a(r, q) = s * x + c * ce * y;
          const cplx vx = v(r, p), vy = v(r, q);
          v(r, p) = c * vx - s * ce * vy;
          v(r, q) = s * vx + c * ce * vy;
        }
        // A <- U^* A
        for (std::size_t col = 0; col < n; ++col) {
          const cplx x = a(p, col), y = a(q, col);
          a(p, col) = c * x - s * e * y;
          a(q, col) = s * x + c * e * y;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) throw Error(ErrorKind::NonConvergence, "Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    std::vector<cplx> col = v.column(order[k]);
    phase_fix_unit(col);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = col[r];
  }
  return out;
}

EigenDecomposition eig_complex_symmetric(const CMatrix& a, double tol) {
  require(a.is_square(), "eigendecomposition of a non-square matrix");
  const double anorm = a.frobenius_norm();
  if ((a - a.transpose()).frobenius_norm() > tol * anorm)
    throw Error(ErrorKind::NotSymmetric, "matrix is not complex symmetric");

  EigenDecomposition raw = eig_general(a);
  const std::size_t n = a.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return lex_less(raw.values[y], raw.values[x]); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = raw.values[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = raw.vectors(r, order[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<cplx> v = out.vectors.column(k);
    const std::vector<cplx> av = a * std::span<const cplx>(v);
    double res = 0.0;
    for (std::size_t r = 0; r < n; ++r) res += std::norm(av[r] - out.values[k] * v[r]);
    if (std::sqrt(res) > tol * std::max(anorm, std::numeric_limits<double>::min()) && anorm > 0.0)
      throw Error(ErrorKind::NonConvergence, "eigenpair residual exceeds tolerance");
  }
  return out;
}

OrthogonalSpectral orthogonal_spectral(const CMatrix& a, double tol) {
  EigenDecomposition eig = eig_complex_symmetric(a, tol);
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, a.frobenius_norm());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(eig.values[i] - eig.values[j]) <= tol * scale)
        throw Error(ErrorKind::RepeatedEigenvalues, "eigenvalues are not pairwise distinct");

  CMatrix u = std::move(eig.vectors);
  for (std::size_t c = 0; c < n; ++c) {
    cplx q = 0.0;
    for (std::size_t r = 0; r < n; ++r) q += u(r, c) * u(r, c);
    // Columns have unit 2-norm, so |u^T u| is already relative.
    if (std::abs(q) < tol) throw Error(ErrorKind::IsotropicEigenvector, "eigenvector is numerically isotropic");
    const cplx root = principal_sqrt(q);
    for (std::size_t r = 0; r < n; ++r) u(r, c) /= root;
  }
  if (det(u).real() < 0.0)
    for (std::size_t r = 0; r < n; ++r) u(r, 0) = -u(r, 0);
  return {std::move(u), CMatrix::diagonal(eig.values)};
}

}  // namespace qnf
