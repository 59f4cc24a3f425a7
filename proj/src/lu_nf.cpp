#include "qnf/lu_nf.hpp"

#include <algorithm>
#include <cmath>

#include "qnf/error.hpp"

namespace qnf {

namespace {

constexpr double kIndependenceThreshold = 1e-10;

void require_qubits(const CTensor& t) { require(t.is_qubit(), "phase normal forms need a qubit tensor"); }

std::vector<double> bits_of(std::size_t v, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = qubit_bit(v, n, k);
  return x;
}

// Dense real solve with partial pivoting; a is row-major n x n.
std::vector<double> solve_real(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (std::abs(a[piv * n + c]) < kIndependenceThreshold)
      throw Error(ErrorKind::SingularMatrix, "phase system is singular");
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      std::swap(b[c], b[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / a[c * n + c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r * n + k] * x[k];
    x[r] = s / a[r * n + r];
  }
  return x;
}

// t with t . v^i = rhs_i for every basis vector v^i.
std::vector<double> solve_phases(const std::vector<std::size_t>& basis, std::size_t n, const std::vector<double>& rhs,
                                 KrausSolver solver) {
  const std::size_t m = basis.size();
  std::vector<double> t(n, 0.0);
  if (m == 0) return t;
  std::vector<std::vector<double>> rows;  // rows of V^T
  for (auto v : basis) rows.push_back(bits_of(v, n));

  if (solver == KrausSolver::MinimumNorm) {
    std::vector<double> gram(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += rows[i][k] * rows[j][k];
        gram[i * m + j] = s;
      }
    const std::vector<double> y = solve_real(std::move(gram), rhs);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n; ++k) t[k] += rows[i][k] * y[i];
    return t;
  }

  // Gauss-Jordan on [V^T | rhs], pivoting on the largest entry of each row.
  std::vector<double> b = rhs;
  std::vector<std::size_t> pivot(m);
  std::vector<bool> used(n, false);
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t best = n;
    for (std::size_t c = 0; c < n; ++c)
      if (!used[c] && (best == n || std::abs(rows[r][c]) > std::abs(rows[r][best]))) best = c;
    if (best == n || std::abs(rows[r][best]) < kIndependenceThreshold)
      throw Error(ErrorKind::SingularMatrix, "phase system is rank deficient");
    used[best] = true;
    pivot[r] = best;
    for (std::size_t q = 0; q < m; ++q) {
      if (q == r) continue;
      const double f = rows[q][best] / rows[r][best];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) rows[q][c] -= f * rows[r][c];
      b[q] -= f * b[r];
    }
  }
  for (std::size_t r = 0; r < m; ++r) t[pivot[r]] = b[r] / rows[r][pivot[r]];
  return t;
}

// out_v = e^{i phi} e^{i t.v} in_v, with matching diagonal factors.
TorusResult apply_phases(const CTensor& omega, double phi, const std::vector<double>& t) {
  const std::size_t n = omega.order();
  TorusResult res;
  res.tensor = omega;
  for (std::size_t v = 0; v < omega.size(); ++v) {
    double angle = phi;
    for (std::size_t k = 0; k < n; ++k)
      if (qubit_bit(v, n, k)) angle += t[k];
    res.tensor[v] = std::polar(1.0, angle) * omega[v];
  }
  res.factors.tag = GroupTag::DiagonalTorus;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx lead = k == 0 ? std::polar(1.0, phi) : cplx{1.0};
    const std::vector<cplx> d{lead, lead * std::polar(1.0, t[k])};
    res.factors.factors.push_back(CMatrix::diagonal(d));
  }
  return res;
}

}  // namespace

PhaseBasis phase_basis(const Support& supp, std::size_t n, Field field) {
  PhaseBasis basis;
  basis.field = field;
  if (field == Field::F2) {
    std::vector<std::size_t> reduced;  // echelon rows, distinct leading bits
    for (auto v : supp) {
      if (v == 0) continue;
      std::size_t x = v;
      for (auto r : reduced) x = std::min(x, x ^ r);
      if (x == 0) continue;
      reduced.push_back(x);
      std::sort(reduced.rbegin(), reduced.rend());
      basis.vectors.push_back(v);
      if (basis.vectors.size() == n) break;
    }
    return basis;
  }
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> pivots;
  for (auto v : supp) {
    if (v == 0) continue;
    std::vector<double> x = bits_of(v, n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const double f = x[pivots[r]];
      if (f != 0.0)
        for (std::size_t k = 0; k < n; ++k) x[k] -= f * rows[r][k];
    }
    std::size_t p = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(x[k]) > std::abs(x[p])) p = k;
    if (std::abs(x[p]) <= kIndependenceThreshold) continue;
    const double s = x[p];
    for (auto& e : x) e /= s;
    rows.push_back(std::move(x));
    pivots.push_back(p);
    basis.vectors.push_back(v);
    if (basis.vectors.size() == n) break;
  }
  return basis;
}

TorusResult torus_normal_simple(const CTensor& omega, double tol) {
  require_qubits(omega);
  const std::size_t n = omega.order();
  const double cut = tol * omega.max_abs();
  PhaseBasis basis;
  basis.field = Field::Real;
  for (std::size_t k = 0; k < n; ++k) basis.vectors.push_back(std::size_t{1} << (n - 1 - k));
  if (!(std::abs(omega[0]) > cut)) throw Error(ErrorKind::SparseSupport, "origin entry vanishes");
  for (auto v : basis.vectors)
    if (!(std::abs(omega[v]) > cut))
      throw Error(ErrorKind::SparseSupport, "entry " + bitstring(v, n) + " vanishes");
  const double phi = -std::arg(omega[0]);
  std::vector<double> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = -std::arg(std::polar(1.0, phi) * omega[basis.vectors[k]]);
  TorusResult res = apply_phases(omega, phi, t);
  res.basis = std::move(basis);
  return res;
}

TorusResult kraus_normal(const CTensor& omega, double tol, KrausSolver solver) {
  require_qubits(omega);
  const std::size_t n = omega.order();
  if (!(std::abs(omega[0]) > tol * omega.max_abs())) throw Error(ErrorKind::ZeroAtOrigin, "origin entry vanishes");
  const double phi = -std::arg(omega[0]);
  PhaseBasis basis = phase_basis(support(omega, tol), n, Field::Real);
  std::vector<double> rhs;
  for (auto v : basis.vectors) rhs.push_back(-std::arg(std::polar(1.0, phi) * omega[v]));
  TorusResult res = apply_phases(omega, phi, solve_phases(basis.vectors, n, rhs, solver));
  res.basis = std::move(basis);
  return res;
}

NormalFormCertificate lu_normal_form(const CTensor& t, double tol) {
  require_qubits(t);
  NormalFormCertificate cert = hosvd_core(t, tol);
  TorusResult kr = kraus_normal(cert.core, tol);
  for (std::size_t k = 0; k < t.order(); ++k) {
    const CMatrix& h = kr.factors.factors[k];
    const std::vector<cplx> inv{1.0 / h(0, 0), 1.0 / h(1, 1)};
    cert.factors.factors[k] = cert.factors.factors[k] * CMatrix::diagonal(inv);
  }
  cert.group = "lu";
  cert.core = std::move(kr.tensor);
  cert.basis = std::move(kr.basis.vectors);
  cert.residual = reconstruction_residual(t, cert.core, cert.factors);
  return cert;
}

}  // namespace qnf
