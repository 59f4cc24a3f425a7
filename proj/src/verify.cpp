#include "qnf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qnf/error.hpp"
#include "qnf/reductions.hpp"
#include "qnf/slocc_nf.hpp"

namespace qnf {

namespace {

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(3);
  ss << x;
  return ss.str();
}

struct Checker {
  VerifyReport& report;
  double tol;

  void fail(std::string msg) { report.failures.push_back(std::move(msg)); }

  void gram_structure(const CTensor& core, bool bilinear, double scale2, const std::string& what) {
    for (std::size_t i = 0; i < core.order(); ++i) {
      const double off = offdiagonal_mass(core, i, bilinear);
      if (off > tol * scale2)
        fail(what + " mode " + std::to_string(i + 1) + ": off-diagonal mass " + fmt(off / scale2) + " (relative)");
      const CMatrix g = bilinear ? pi_symmetric(core, i).matrix : pi_hermitian(core, i).matrix;
      for (std::size_t k = 0; k + 1 < g.rows(); ++k) {
        const cplx a = g(k, k), b = g(k + 1, k + 1);
        const double slack = tol * scale2;
        const bool ordered = bilinear ? !lex_less(a + cplx{slack, slack}, b) : a.real() >= b.real() - slack;
        if (!ordered) fail(what + " mode " + std::to_string(i + 1) + ": diagonal not decreasing");
      }
    }
  }
};

}  // namespace

double offdiagonal_mass(const CTensor& core, std::size_t mode, bool bilinear) {
  const CMatrix g = bilinear ? pi_symmetric(core, mode).matrix : pi_hermitian(core, mode).matrix;
  double s = 0.0;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (r != c) s += std::norm(g(r, c));
  return std::sqrt(s);
}

VerifyReport verify_certificate(const CTensor& input, const NormalFormCertificate& cert, double tol) {
  VerifyReport report;
  Checker check{report, tol};
  if (cert.factors.factors.size() != input.order() || cert.core.dims() != input.dims()) {
    check.fail("certificate shape does not match the input tensor");
    return report;
  }
  for (std::size_t k = 0; k < input.order(); ++k)
    if (!cert.factors.factors[k].is_square() || cert.factors.factors[k].rows() != input.dims()[k]) {
      check.fail("factor " + std::to_string(k + 1) + " has the wrong size");
      return report;
    }

  report.residual = reconstruction_residual(input, cert.core, cert.factors);
  if (!(report.residual < tol)) check.fail("reconstruction residual " + fmt(report.residual));
  report.group_defect = group_defect(cert.factors);
  if (!(report.group_defect < tol))
    check.fail("factors violate the " + std::string(to_string(cert.factors.tag)) + " relations by " +
               fmt(report.group_defect));

  const double scale2 = std::pow(std::max(cert.core.frobenius_norm(), 1e-300), 2);
  const CTensor& core = cert.core;
  const std::size_t n = core.order();

  if (cert.group == "hosvd") {
    check.gram_structure(core, false, scale2, "core");
  } else if (cert.group == "ohosvd") {
    check.gram_structure(core, true, scale2, "core");
  } else if (cert.group == "lu") {
    check.gram_structure(core, false, scale2, "core");
    std::vector<std::size_t> fixed = cert.basis;
    fixed.push_back(0);
    const double cut = tol * core.max_abs();
    for (auto v : fixed) {
      if (v >= core.size()) {
        check.fail("basis index out of range");
        continue;
      }
      if (!(core[v].real() > cut) || std::abs(core[v].imag()) > 100 * tol * core.max_abs())
        check.fail("entry " + bitstring(v, n) + " is not real positive");
    }
  } else if (cert.group == "slocc") {
    if (!core.is_qubit()) {
      check.fail("SLOCC core is not a qubit tensor");
    } else if (n == 3) {
      const CTensor v1 = ghz_v1();
      cplx c{};
      for (std::size_t v = 0; v < 8; ++v) c += v1[v] * core[v];
      c /= 4.0;
      if ((core - c * v1).frobenius_norm() > tol * std::sqrt(scale2)) check.fail("core is not a multiple of v1");
    } else if (n % 2 == 0) {
      const std::vector<std::size_t> pair_dims(n / 2, 4);
      const CTensor tc = multilinear_apply(reshape(core, pair_dims), std::vector<CMatrix>(n / 2, mat_T()));
      check.gram_structure(tc, true, scale2, "T-transformed core");
    } else {
      check.gram_structure(core, true, scale2, "core");
      for (std::size_t i = 0; i < n; ++i) {
        const CMatrix p = pi_slocc(core, i).matrix;
        if (std::abs(p(0, 1)) + std::abs(p(1, 0)) + std::abs(p(0, 0) - p(1, 1)) > tol * scale2)
          check.fail("pi_" + std::to_string(i + 1) + " of the core is not scalar");
      }
    }
  } else {
    check.fail("unknown certificate group '" + cert.group + "'");
  }
  return report;
}

}  // namespace qnf
