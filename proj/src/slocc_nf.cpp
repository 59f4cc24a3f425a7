#include "qnf/slocc_nf.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qnf/error.hpp"
#include "qnf/reductions.hpp"

namespace qnf {

namespace {

void require_qubits(const CTensor& t) { require(t.is_qubit(), "SLOCC normal forms need a qubit tensor"); }

// out_v = (-1)^{g + t.v} in_v with matching diagonal sign factors.
TorusResult apply_signs(const CTensor& omega, int global, std::size_t tmask) {
  const std::size_t n = omega.order();
  TorusResult res;
  res.tensor = omega;
  for (std::size_t v = 0; v < omega.size(); ++v)
    if ((global + std::popcount(v & tmask)) & 1) res.tensor[v] = -omega[v];
  res.factors.tag = GroupTag::SignTorus;
  for (std::size_t k = 0; k < n; ++k) {
    const double lead = (k == 0 && global) ? -1.0 : 1.0;
    const double tail = qubit_bit(tmask, n, k) ? -lead : lead;
    res.factors.factors.push_back(CMatrix::diagonal(std::vector<cplx>{lead, tail}));
  }
  return res;
}

CMatrix rotation(cplx z) {
  const cplx c = std::cos(z), s = std::sin(z);
  return CMatrix{{c, -s}, {s, c}};
}

std::vector<CMatrix> inverses(const std::vector<CMatrix>& ms) {
  std::vector<CMatrix> out;
  for (const auto& m : ms) out.push_back(inverse(m));
  return out;
}

std::vector<CMatrix> normalizers(const CTensor& t, double tol, std::vector<cplx>* zs) {
  std::vector<CMatrix> ls;
  for (std::size_t i = 0; i < t.order(); ++i) {
    SymmetricNormalizer sn;
    try {
      sn = sl2_symmetric_normalizer(pi_slocc(t, i).matrix, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularMatrix) throw;
      throw Error(ErrorKind::SingularReduction, "reduction of mode " + std::to_string(i + 1) + " is singular",
                  static_cast<int>(i + 1));
    }
    ls.push_back(std::move(sn.L));
    if (zs) zs->push_back(sn.z);
  }
  return ls;
}

}  // namespace

int sign_s(cplx z) {
  if (z == cplx{}) throw Error(ErrorKind::ZeroArgument, "sign of zero is undefined");
  if (z.real() > 0.0) return 0;
  if (z.real() < 0.0) return 1;
  return z.imag() > 0.0 ? 0 : 1;
}

TorusResult orth_torus_simple(const CTensor& omega, double tol) {
  require_qubits(omega);
  const std::size_t n = omega.order();
  const double cut = tol * omega.max_abs();
  PhaseBasis basis;
  basis.field = Field::F2;
  for (std::size_t k = 0; k < n; ++k) basis.vectors.push_back(std::size_t{1} << (n - 1 - k));
  if (!(std::abs(omega[0].real()) > cut)) throw Error(ErrorKind::SparseSupport, "origin entry has zero real part");
  for (auto v : basis.vectors)
    if (!(std::abs(omega[v].real()) > cut))
      throw Error(ErrorKind::SparseSupport, "entry " + bitstring(v, n) + " has zero real part");
  const int global = omega[0].real() < 0.0 ? 1 : 0;
  std::size_t tmask = 0;
  for (auto v : basis.vectors) {
    const double re = global ? -omega[v].real() : omega[v].real();
    if (re < 0.0) tmask |= v;
  }
  TorusResult res = apply_signs(omega, global, tmask);
  res.basis = std::move(basis);
  return res;
}

TorusResult orth_torus_general(const CTensor& omega, double tol) {
  require_qubits(omega);
  if (!(std::abs(omega[0]) > tol * omega.max_abs())) throw Error(ErrorKind::ZeroAtOrigin, "origin entry vanishes");
  const int global = sign_s(omega[0]);
  PhaseBasis basis = phase_basis(support(omega, tol), omega.order(), Field::F2);

  // Gauss-Jordan over F_2 on rows (v^i | s_i); free coordinates stay 0.
  struct Row {
    std::size_t mask;
    int rhs;
  };
  std::vector<Row> rows;
  for (auto v : basis.vectors) rows.push_back({v, sign_s(global ? -omega[v] : omega[v])});
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t p = std::bit_floor(rows[r].mask);
    pivots.push_back(p);
    for (std::size_t q = 0; q < rows.size(); ++q)
      if (q != r && (rows[q].mask & p)) {
        rows[q].mask ^= rows[r].mask;
        rows[q].rhs ^= rows[r].rhs;
      }
  }
  std::size_t tmask = 0;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].rhs) tmask |= pivots[r];

  TorusResult res = apply_signs(omega, global, tmask);
  res.basis = std::move(basis);
  return res;
}

std::pair<CMatrix, CMatrix> split_kronecker(const CMatrix& p, double tol) {
  require(p.rows() == 4 && p.cols() == 4, "Kronecker split needs a 4x4 matrix");
  // R[(a,c),(b,d)] = P[(a,b),(c,d)] is rank one for P = A (x) B.
  CMatrix r(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) r(2 * a + c, 2 * b + d) = p(2 * a + b, 2 * c + d);
  std::size_t x = 0, y = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (std::abs(r(i, j)) > std::abs(r(x, y))) x = i, y = j;
  if (r(x, y) == cplx{}) throw Error(ErrorKind::NonFactorizable, "zero matrix has no Kronecker split");
  CMatrix a{{r(0, y), r(1, y)}, {r(2, y), r(3, y)}};
  CMatrix b{{r(x, 0), r(x, 1)}, {r(x, 2), r(x, 3)}};
  b *= 1.0 / r(x, y);
  const cplx da = det(a);
  if (std::abs(da) <= tol * a.max_abs() * a.max_abs())
    throw Error(ErrorKind::NonFactorizable, "Kronecker factor is singular");
  const cplx s = principal_sqrt(da);
  a *= 1.0 / s;
  b *= s;
  for (const auto& e : a.entries()) {
    if (std::abs(e) > tol * a.max_abs()) {
      if (sign_s(e) == 1) {
        a *= -1.0;
        b *= -1.0;
      }
      break;
    }
  }
  if ((kron(a, b) - p).frobenius_norm() > tol * std::max(1.0, p.frobenius_norm()))
    throw Error(ErrorKind::NonFactorizable, "matrix is not a Kronecker product of SL_2 factors");
  return {std::move(a), std::move(b)};
}

NormalFormCertificate slocc_even(const CTensor& t, double tol) {
  require_qubits(t);
  const std::size_t n = t.order();
  require(n >= 4 && n % 2 == 0, "even SLOCC normal form needs an even number n >= 4 of qubits");
  const std::size_t k = n / 2;
  const std::vector<std::size_t> pair_dims(k, 4);
  const std::vector<std::size_t> qubit_dims(n, 2);
  const CMatrix tm = mat_T();
  const CMatrix tm_adj = tm.adjoint();

  const CTensor phi1 = multilinear_apply(reshape(t, pair_dims), std::vector<CMatrix>(k, tm));
  NormalFormCertificate oh = ohosvd_core(phi1, tol);
  TorusResult tr = orth_torus_general(reshape(oh.core, qubit_dims), tol);
  const CTensor omega =
      reshape(multilinear_apply(reshape(tr.tensor, pair_dims), std::vector<CMatrix>(k, tm_adj)), qubit_dims);

  NormalFormCertificate cert;
  cert.group = "slocc";
  cert.factors.tag = GroupTag::SL2;
  for (std::size_t p = 0; p < k; ++p) {
    const CMatrix sigma = kron(tr.factors.factors[2 * p], tr.factors.factors[2 * p + 1]);
    const CMatrix pm = tm_adj * oh.factors.factors[p] * sigma * tm;
    auto [a, b] = split_kronecker(pm, tol);
    cert.factors.factors.push_back(std::move(a));
    cert.factors.factors.push_back(std::move(b));
  }
  cert.core = omega;
  cert.gaps = std::move(oh.gaps);
  cert.basis = std::move(tr.basis.vectors);
  cert.residual = reconstruction_residual(t, cert.core, cert.factors);
  return cert;
}

SymmetricNormalizer sl2_symmetric_normalizer(const CMatrix& m, double tol) {
  require(m.rows() == 2 && m.cols() == 2, "symmetric normalizer needs a 2x2 matrix");
  const double norm = m.frobenius_norm();
  if (std::abs(m(0, 1) - m(1, 0)) > tol * norm) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
  const cplx m11 = m(0, 0), m22 = m(1, 1), m12 = 0.5 * (m(0, 1) + m(1, 0));
  const cplx delta = det(m);
  if (std::abs(delta) <= tol * norm * norm) throw Error(ErrorKind::SingularMatrix, "symmetric matrix is singular");
  const cplx z = principal_sqrt(delta);
  const cplx q = principal_root4(delta);

  if (std::abs(m11) > tol * norm) {
    const cplx r = principal_sqrt(m11);
    return {CMatrix{{q / r, 0.0}, {-(r / q) * m12 / m11, r / q}}, z};
  }
  if (std::abs(m22) > tol * norm) {
    const cplx r = principal_sqrt(m22);
    return {CMatrix{{r / q, -(r / q) * m12 / m22}, {0.0, q / r}}, z};
  }
  // Anti-diagonal M: this L gives L M L^T = i m12 I; K flips the sign if
  // that is not the principal root.
  const cplx e = std::polar(1.0, std::numbers::pi / 4);
  const cplx h = cplx{0.0, 1.0} / std::numbers::sqrt2;
  CMatrix l{{-e * h, e * h}, {std::conj(e) * h, std::conj(e) * h}};
  const cplx realized = cplx{0.0, 1.0} * m12;
  if (std::abs(realized - z) > std::abs(realized + z)) l = mat_K() * l;
  return {std::move(l), z};
}

NormalFormCertificate slocc_odd(const CTensor& t, double tol) {
  require_qubits(t);
  const std::size_t n = t.order();
  require(n >= 5 && n % 2 == 1, "odd SLOCC normal form needs an odd number n >= 5 of qubits");

  std::vector<cplx> zs;
  std::vector<CMatrix> ls = normalizers(t, tol, &zs);
  std::vector<CMatrix> flips;
  for (auto& z : zs) {
    if (lex_less(z, -z)) {
      flips.push_back(mat_K());
      z = -z;
    } else {
      flips.push_back(CMatrix::identity(2));
    }
  }
  const CTensor psi = multilinear_apply(multilinear_apply(t, ls), flips);
  NormalFormCertificate oh = ohosvd_core(psi, tol);

  NormalFormCertificate cert;
  cert.group = "slocc";
  cert.factors.tag = GroupTag::SL2;
  cert.core = std::move(oh.core);
  const double cut = tol * cert.core.max_abs();
  for (std::size_t v = 0; v < cert.core.size(); ++v) {
    const cplx a = cert.core[v];
    if (std::abs(a) > cut) {
      if (lex_less(a, -a)) {
        cert.core *= -1.0;
        oh.factors.factors[0] *= -1.0;
      }
      break;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    cert.factors.factors.push_back(inverse(ls[i]) * inverse(flips[i]) * oh.factors.factors[i]);
  cert.gaps = std::move(oh.gaps);
  cert.residual = reconstruction_residual(t, cert.core, cert.factors);
  return cert;
}

CTensor genericity_witness(std::size_t n) {
  require(n >= 5 && n % 2 == 1, "genericity witness needs an odd n >= 5");
  const std::size_t k = (n - 1) / 2;
  CTensor t = CTensor::qubits(n);
  t[0] = 1.0 - std::ldexp(1.0, static_cast<int>(2 * k - 1));
  for (std::size_t v = 1; v < t.size(); ++v)
    if (std::popcount(v) % 2 == 0) t[v] = 1.0;
  return t;
}

std::string_view to_string(OrbitClass3 c) noexcept {
  switch (c) {
    case OrbitClass3::GHZ: return "GHZ";
    case OrbitClass3::W: return "W";
    case OrbitClass3::Bisep12_3: return "Bisep12_3";
    case OrbitClass3::Bisep13_2: return "Bisep13_2";
    case OrbitClass3::Bisep1_23: return "Bisep1_23";
    case OrbitClass3::Separable: return "Separable";
  }
  return "unknown";
}

std::array<int, 3> rank_pattern(OrbitClass3 c) noexcept {
  switch (c) {
    case OrbitClass3::GHZ: return {2, 2, 2};
    case OrbitClass3::W: return {1, 1, 1};
    case OrbitClass3::Bisep12_3: return {0, 0, 1};
    case OrbitClass3::Bisep13_2: return {0, 1, 0};
    case OrbitClass3::Bisep1_23: return {1, 0, 0};
    case OrbitClass3::Separable: return {0, 0, 0};
  }
  return {-1, -1, -1};
}

CTensor class_representative(OrbitClass3 c) {
  switch (c) {
    case OrbitClass3::GHZ: return CTensor::from_kets(3, {{"000", 1.0}, {"111", 1.0}});
    case OrbitClass3::W: return CTensor::from_kets(3, {{"001", 1.0}, {"010", 1.0}, {"100", 1.0}});
    case OrbitClass3::Bisep12_3: return CTensor::from_kets(3, {{"001", 1.0}, {"111", 1.0}});
    case OrbitClass3::Bisep13_2: return CTensor::from_kets(3, {{"010", 1.0}, {"111", 1.0}});
    case OrbitClass3::Bisep1_23: return CTensor::from_kets(3, {{"100", 1.0}, {"111", 1.0}});
    case OrbitClass3::Separable: return CTensor::from_kets(3, {{"000", 1.0}});
  }
  return CTensor::qubits(3);
}

Classification3 classify_3qubit(const CTensor& t, double tol) {
  require(t.is_qubit() && t.order() == 3, "3-qubit classifier needs a 3-qubit tensor");
  const double norm = t.frobenius_norm();
  if (norm == 0.0) throw Error(ErrorKind::ZeroTensor, "tensor is zero");
  const CTensor unit = (1.0 / norm) * t;
  std::array<int, 3> ranks{};
  for (std::size_t i = 0; i < 3; ++i) ranks[i] = static_cast<int>(numerical_rank(pi_slocc(unit, i).matrix, tol));
  for (OrbitClass3 c : {OrbitClass3::GHZ, OrbitClass3::W, OrbitClass3::Bisep12_3, OrbitClass3::Bisep13_2,
                        OrbitClass3::Bisep1_23, OrbitClass3::Separable})
    if (rank_pattern(c) == ranks) return {c, ranks};
  throw Error(ErrorKind::UnknownRankPattern, "rank triple (" + std::to_string(ranks[0]) + "," +
                                                 std::to_string(ranks[1]) + "," + std::to_string(ranks[2]) +
                                                 ") matches no orbit");
}

CTensor ghz_v1() { return CTensor::from_kets(3, {{"001", 1.0}, {"010", 1.0}, {"100", 1.0}, {"111", -1.0}}); }
CTensor ghz_v2() { return CTensor::from_kets(3, {{"101", 1.0}, {"110", 1.0}, {"000", -1.0}, {"011", 1.0}}); }

GhzNormalForm ghz_normal_form(const CTensor& t, double tol) {
  require(t.is_qubit() && t.order() == 3, "GHZ normal form needs a 3-qubit tensor");
  const std::vector<CMatrix> ls = normalizers(t, tol, nullptr);
  const CTensor psi = multilinear_apply(t, ls);
  const CTensor v1 = ghz_v1(), v2 = ghz_v2();
  cplx a{}, b{};
  for (std::size_t v = 0; v < 8; ++v) {
    a += v1[v] * psi[v];
    b += v2[v] * psi[v];
  }
  a /= 4.0;
  b /= 4.0;
  const double psi_norm = psi.frobenius_norm();
  GhzNormalForm out;
  out.span_residual = (psi - a * v1 - b * v2).frobenius_norm() / psi_norm;
  if (out.span_residual > tol)
    throw Error(ErrorKind::SpanViolation, "normalized tensor leaves span{v1, v2}");
  const cplx i1{0.0, 1.0};
  const cplx alpha = 0.5 * (a - i1 * b), beta = 0.5 * (a + i1 * b);
  if (std::abs(alpha) <= tol * psi_norm || std::abs(beta) <= tol * psi_norm)
    throw Error(ErrorKind::DegenerateSpan, "projection onto an eigenline of the rotation action vanishes");

  const double mean_arg = 0.5 * (std::arg(alpha) + std::arg(beta));
  const double mag = std::sqrt(std::abs(alpha) * std::abs(beta));
  // Solves alpha e^{-iz} = beta e^{iz}; the common value is mag e^{i mean_arg}.
  const cplx z{0.5 * (std::arg(alpha) - std::arg(beta)), 0.5 * std::log(std::abs(beta) / std::abs(alpha))};
  cplx coef = 2.0 * std::polar(mag, mean_arg);
  double eps = 1.0;
  if (sign_s(coef) == 1) {
    coef = -coef;
    eps = -1.0;
  }

  out.coefficient = coef;
  NormalFormCertificate& cert = out.certificate;
  cert.group = "slocc";
  cert.factors.tag = GroupTag::SL2;
  cert.factors.factors = inverses(ls);
  cert.factors.factors[2] = cert.factors.factors[2] * rotation(-z);
  cert.factors.factors[2] *= eps;
  cert.core = coef * v1;
  cert.coefficient = coef;
  cert.orbit_class = "GHZ";
  cert.residual = reconstruction_residual(t, cert.core, cert.factors);
  return out;
}

NormalFormCertificate slocc_normal_form(const CTensor& t, double tol) {
  require_qubits(t);
  const std::size_t n = t.order();
  if (n == 3) return ghz_normal_form(t, tol).certificate;
  if (n >= 4 && n % 2 == 0) return slocc_even(t, tol);
  if (n >= 5) return slocc_odd(t, tol);
  throw Error(ErrorKind::InvalidArgument, "SLOCC normal forms need n >= 3 qubits");
}

}  // namespace qnf
