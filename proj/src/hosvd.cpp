#include "qnf/hosvd.hpp"

#include <algorithm>
#include <cmath>

#include "qnf/error.hpp"
#include "qnf/reductions.hpp"

namespace qnf {

std::string_view to_string(GroupTag tag) noexcept {
  switch (tag) {
    case GroupTag::Unitary: return "unitary";
    case GroupTag::SpecialOrthogonal: return "specialOrthogonal";
    case GroupTag::SL2: return "sl2";
    case GroupTag::DiagonalTorus: return "diagonalTorus";
    case GroupTag::SignTorus: return "signTorus";
  }
  return "unknown";
}

GroupTag group_tag_from_string(std::string_view name) {
  for (GroupTag t : {GroupTag::Unitary, GroupTag::SpecialOrthogonal, GroupTag::SL2, GroupTag::DiagonalTorus,
                     GroupTag::SignTorus})
    if (to_string(t) == name) return t;
  throw Error(ErrorKind::InvalidArgument, "unknown group tag '" + std::string(name) + "'");
}

double group_defect(const GroupFactorList& g) {
  double worst = 0.0;
  for (const CMatrix& m : g.factors) {
    if (!m.is_square()) return INFINITY;
    const CMatrix id = CMatrix::identity(m.rows());
    double off_diag = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (r != c) off_diag = std::max(off_diag, std::abs(m(r, c)));
    double d = 0.0;
    switch (g.tag) {
      case GroupTag::Unitary: d = (m.adjoint() * m - id).frobenius_norm(); break;
      case GroupTag::SpecialOrthogonal:
        d = std::max((m.transpose() * m - id).frobenius_norm(), std::abs(det(m) - 1.0));
        break;
      case GroupTag::SL2: d = std::abs(det(m) - 1.0); break;
      case GroupTag::DiagonalTorus:
        d = off_diag;
        for (std::size_t r = 0; r < m.rows(); ++r) d = std::max(d, std::abs(std::abs(m(r, r)) - 1.0));
        break;
      case GroupTag::SignTorus:
        d = off_diag;
        for (std::size_t r = 0; r < m.rows(); ++r)
          d = std::max(d, std::min(std::abs(m(r, r) - 1.0), std::abs(m(r, r) + 1.0)));
        break;
    }
    worst = std::max(worst, d);
  }
  return worst;
}

double reconstruction_residual(const CTensor& input, const CTensor& core, const GroupFactorList& g) {
  const CTensor diff = input - multilinear_apply(core, g.factors);
  const double scale = input.frobenius_norm();
  return scale > 0.0 ? diff.frobenius_norm() / scale : diff.frobenius_norm();
}

namespace {

std::vector<CMatrix> transformed(const std::vector<CMatrix>& fs, bool adjoint) {
  std::vector<CMatrix> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(adjoint ? f.adjoint() : f.transpose());
  return out;
}

}  // namespace

NormalFormCertificate hosvd_core(const CTensor& t, double tol) {
  NormalFormCertificate cert;
  cert.group = "hosvd";
  cert.factors.tag = GroupTag::Unitary;
  for (std::size_t i = 0; i < t.order(); ++i) {
    const CMatrix gram = pi_hermitian(t, i).matrix;
    HermitianEigen eig = eig_hermitian(gram);
    const double scale = std::max(1.0, gram.frobenius_norm());
    double gap = INFINITY;
    for (std::size_t k = 0; k + 1 < eig.values.size(); ++k) gap = std::min(gap, eig.values[k] - eig.values[k + 1]);
    if (gap <= tol * scale)
      throw Error(ErrorKind::RepeatedEigenvalues,
                  "mode " + std::to_string(i + 1) + " reduced density matrix has repeated eigenvalues",
                  static_cast<int>(i + 1));
    cert.gaps.push_back(gap);
    cert.factors.factors.push_back(std::move(eig.vectors));
  }
  cert.core = multilinear_apply(t, transformed(cert.factors.factors, true));
  cert.residual = reconstruction_residual(t, cert.core, cert.factors);
  return cert;
}

NormalFormCertificate ohosvd_core(const CTensor& t, double tol) {
  NormalFormCertificate cert;
  cert.group = "ohosvd";
  cert.factors.tag = GroupTag::SpecialOrthogonal;
  for (std::size_t i = 0; i < t.order(); ++i) {
    OrthogonalSpectral os;
    try {
      os = orthogonal_spectral(pi_symmetric(t, i).matrix, tol);
    } catch (const Error& e) {
      throw Error(e.kind(), "mode " + std::to_string(i + 1) + ": " + e.what(), static_cast<int>(i + 1));
    }
    std::vector<cplx> diag(os.D.rows());
    for (std::size_t k = 0; k < diag.size(); ++k) diag[k] = os.D(k, k);
    cert.gaps.push_back(min_gap(diag));
    cert.factors.factors.push_back(std::move(os.U));
  }
  cert.core = multilinear_apply(t, transformed(cert.factors.factors, false));
  cert.residual = reconstruction_residual(t, cert.core, cert.factors);
  return cert;
}

}  // namespace qnf
