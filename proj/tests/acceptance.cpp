// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qnf/error.hpp"
#include "qnf/hosvd.hpp"
#include "qnf/linalg.hpp"
#include "qnf/lu_nf.hpp"
#include "qnf/reductions.hpp"
#include "qnf/rng.hpp"
#include "qnf/slocc_nf.hpp"
#include "qnf/verify.hpp"

using namespace qnf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double max_diff(const CMatrix& a, const CMatrix& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

std::vector<CMatrix> unitaries(std::size_t n, Rng& rng) {
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_unitary(2, rng));
  return out;
}

std::vector<CMatrix> sl2s(std::size_t n, Rng& rng) {
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_sl2(rng));
  return out;
}

CTensor random_qubits(std::size_t n, Rng& rng) { return random_tensor(std::vector<std::size_t>(n, 2), rng); }

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome table_reproduction() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(101);
  for (OrbitClass3 c : {OrbitClass3::GHZ, OrbitClass3::W, OrbitClass3::Bisep12_3, OrbitClass3::Bisep13_2,
                        OrbitClass3::Bisep1_23, OrbitClass3::Separable}) {
    const CTensor rep = class_representative(c);
    const auto got = classify_3qubit(rep, 1e-8);
    if (got.ranks != rank_pattern(c) || got.label != c) o.fail(std::string("representative of ") + std::string(to_string(c)));
    for (int k = 0; k < 20; ++k)
      if (classify_3qubit(multilinear_apply(rep, sl2s(3, rng)), 1e-8).label != c)
        o.fail(std::string("translate of ") + std::string(to_string(c)));
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) o.fail(fmt("runtime %.3f s", s));
  if (o.ok) o.detail = fmt("6 classes x 21 tensors in %.3f s", s);
  return o;
}

Outcome matrix_multiplication_tensor() {
  Outcome o;
  const auto t0 = Clock::now();
  CTensor phi = CTensor::qubits(6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) phi[(i << 5) | (k << 4) | (i << 3) | (j << 2) | (j << 1) | k] = 1.0;
  double worst = 0.0;
  for (std::size_t p = 0; p < 3; ++p)
    worst = std::max(worst, (pi_pair(phi, 2 * p, 2 * p + 1).matrix - 2.0 * CMatrix::identity(4)).frobenius_norm());
  if (!(worst < 1e-12)) o.fail(fmt("||pi - 2I|| = %.3e", worst));
  try {
    slocc_even(phi);
    o.fail("slocc_even accepted the tensor");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RepeatedEigenvalues) o.fail("slocc_even raised " + std::string(to_string(e.kind())));
  }
  const double s = seconds_since(t0);
  if (s >= 1.0) o.fail(fmt("runtime %.3f s", s));
  if (o.ok) o.detail = fmt("max ||pi - 2I|| = %.1e, RepeatedEigenvalues raised", worst);
  return o;
}

Outcome witness() {
  Outcome o;
  const CTensor w = genericity_witness(5);
  const CMatrix gram = CMatrix::diagonal(std::vector<cplx>{56.0, 8.0});
  double worst = 0.0;
  for (std::size_t m = 0; m < 5; ++m) {
    worst = std::max(worst, max_diff(pi_slocc(w, m).matrix, -8.0 * CMatrix::identity(2)));
    worst = std::max(worst, max_diff(pi_symmetric(w, m).matrix, gram));
  }
  if (!(worst < 1e-12)) o.fail(fmt("reduction error %.3e", worst));
  try {
    const auto cert = slocc_odd(w);
    if (!(cert.residual < 1e-8)) o.fail(fmt("slocc_odd residual %.3e", cert.residual));
    if (o.ok) o.detail = fmt("reduction error %.1e, ", worst) + fmt("residual %.1e", cert.residual);
  } catch (const Error& e) {
    o.fail(std::string("slocc_odd raised ") + e.what());
  }
  return o;
}

Outcome orbit_invariance() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(104);
  struct Suite {
    const char* name;
    std::size_t n;
    bool unitary;
    std::function<CTensor(const CTensor&)> nf;
  };
  const std::vector<Suite> suites{
      {"LU n=3", 3, true, [](const CTensor& t) { return lu_normal_form(t).core; }},
      {"LU n=4", 4, true, [](const CTensor& t) { return lu_normal_form(t).core; }},
      {"LU n=5", 5, true, [](const CTensor& t) { return lu_normal_form(t).core; }},
      {"SLOCC n=4", 4, false, [](const CTensor& t) { return slocc_even(t).core; }},
      {"SLOCC n=5", 5, false, [](const CTensor& t) { return slocc_odd(t).core; }},
  };
  double worst = 0.0;
  for (const auto& s : suites) {
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const CTensor t = random_qubits(s.n, rng);
      const CTensor moved = multilinear_apply(t, s.unitary ? unitaries(s.n, rng) : sl2s(s.n, rng));
      try {
        const double d = relative_max_diff(s.nf(t), s.nf(moved));
        worst = std::max(worst, d);
        if (!(d <= 1e-6)) ++failures;
      } catch (const Error& e) {
        ++failures;
      }
    }
    if (failures > 0) o.fail(std::string(s.name) + ": " + std::to_string(failures) + "/100 mismatches");
  }
  const double sec = seconds_since(t0);
  if (sec >= 60.0) o.fail(fmt("runtime %.2f s", sec));
  if (o.ok) o.detail = fmt("500 trials, worst relative difference %.1e, ", worst) + fmt("%.2f s", sec);
  return o;
}

Outcome reconstruction_and_structure() {
  Outcome o;
  Rng rng(105);
  double worst_res = 0.0;
  const auto check = [&](const CTensor& t, const NormalFormCertificate& c) {
    worst_res = std::max(worst_res, c.residual);
    if (!(c.residual < 1e-8)) o.fail(c.group + fmt(" residual %.3e", c.residual));
    const auto rep = verify_certificate(t, c, 1e-8);
    if (!rep.ok()) o.fail(c.group + ": " + rep.failures.front());
  };
  for (int trial = 0; trial < 20; ++trial) {
    for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, {2, 3, 4}, {2, 2, 2, 2, 2}}) {
      const CTensor t = random_tensor(dims, rng);
      const double phi2 = t.frobenius_norm() * t.frobenius_norm();
      const auto h = hosvd_core(t);
      check(t, h);
      const auto oh = ohosvd_core(t);
      check(t, oh);
      for (std::size_t m = 0; m < dims.size(); ++m) {
        if (!(offdiagonal_mass(h.core, m, false) < 1e-8 * phi2)) o.fail("hosvd off-diagonal mass");
        if (!(offdiagonal_mass(oh.core, m, true) < 1e-8 * phi2)) o.fail("ohosvd off-diagonal mass");
        const CMatrix gh = pi_hermitian(h.core, m).matrix, go = pi_symmetric(oh.core, m).matrix;
        for (std::size_t k = 0; k + 1 < gh.rows(); ++k) {
          if (gh(k, k).real() < gh(k + 1, k + 1).real()) o.fail("hosvd diagonal not decreasing");
          if (lex_less(go(k, k), go(k + 1, k + 1))) o.fail("ohosvd diagonal not lex decreasing");
        }
      }
    }
    for (std::size_t n = 3; n <= 6; ++n) {
      const CTensor t = random_qubits(n, rng);
      check(t, lu_normal_form(t));
      check(t, slocc_normal_form(t));
    }
  }
  if (o.ok) o.detail = fmt("220 certificates, worst residual %.1e", worst_res);
  return o;
}

Outcome kraus_independence() {
  Outcome o;
  Rng rng(106);
  int deficient = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 4);
    const std::size_t size = std::size_t{1} << n;
    const std::size_t extra = 1 + static_cast<std::size_t>(trial % 5);
    CTensor t = CTensor::qubits(n);
    t[0] = rng.complex_normal();
    for (std::size_t k = 0; k < extra; ++k) t[1 + static_cast<std::size_t>(rng.uniform() * (size - 1))] = rng.complex_normal();
    const auto a = kraus_normal(t, kDefaultTol, KrausSolver::MinimumNorm);
    const auto b = kraus_normal(t, kDefaultTol, KrausSolver::Pivoted);
    if (a.basis.vectors.size() < n) ++deficient;
    const double scale = t.max_abs();
    double d = 0.0, idem = 0.0;
    const auto again = kraus_normal(a.tensor);
    for (std::size_t v = 0; v < size; ++v) {
      d = std::max(d, std::abs(a.tensor[v] - b.tensor[v]) / scale);
      idem = std::max(idem, std::abs(again.tensor[v] - a.tensor[v]) / scale);
    }
    worst = std::max({worst, d, idem});
    if (!(d < 1e-10)) o.fail(fmt("solvers differ by %.3e", d));
    if (!(idem < 1e-10)) o.fail(fmt("not idempotent, %.3e", idem));
  }
  if (deficient == 0) o.fail("no rank-deficient support was exercised");
  if (o.ok) o.detail = std::to_string(deficient) + "/50 rank-deficient supports, " + fmt("worst difference %.1e", worst);
  return o;
}

Outcome matrix_case() {
  Outcome o;
  Rng rng(107);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const CTensor t = random_tensor({2, 2}, rng);
    Eigen::Matrix2cd m;
    m << t[0], t[1], t[2], t[3];
    const Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2cd>(m).singularValues();
    const auto cert = lu_normal_form(t);
    worst = std::max({worst, std::abs(cert.core[0] - sv(0)), std::abs(cert.core[3] - sv(1)), std::abs(cert.core[1]),
                      std::abs(cert.core[2])});
  }
  if (!(worst < 1e-10)) o.fail(fmt("core differs from SVD by %.3e", worst));
  int crowded = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto cert = ohosvd_core(random_tensor({4, 4}, rng));
    const CMatrix c = flatten(cert.core, 0);
    const double cut = 1e-8 * c.max_abs();
    for (std::size_t r = 0; r < 4; ++r) {
      int row = 0, col = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        row += std::abs(c(r, k)) > cut;
        col += std::abs(c(k, r)) > cut;
      }
      if (row > 1 || col > 1) ++crowded;
    }
  }
  if (crowded > 0) o.fail(std::to_string(crowded) + " OHOSVD rows/columns with several nonzeros");
  if (o.ok) o.detail = fmt("SVD agreement %.1e, 50 monomial OHOSVD cores", worst);
  return o;
}

Outcome linear_algebra_kernel() {
  Outcome o;
  Rng rng(108);
  double w_orth = 0.0, w_det = 0.0, w_rec = 0.0;
  int done = 0;
  while (done < 200) {
    const std::size_t d = 2 + static_cast<std::size_t>(done % 5);
    const CMatrix a = random_complex_symmetric(d, rng);
    std::vector<cplx> ev = eig_general(a).values;
    if (min_gap(ev) < 1e-6 * a.frobenius_norm()) continue;  // distinct eigenvalues only
    const auto os = orthogonal_spectral(a);
    w_orth = std::max(w_orth, (os.U.transpose() * os.U - CMatrix::identity(d)).frobenius_norm());
    w_det = std::max(w_det, std::abs(det(os.U) - 1.0));
    w_rec = std::max(w_rec, (a - os.U * os.D * os.U.transpose()).frobenius_norm() / a.frobenius_norm());
    ++done;
  }
  if (!(w_orth < 1e-9)) o.fail(fmt("||U^T U - I|| = %.3e", w_orth));
  if (!(w_det < 1e-9)) o.fail(fmt("|det U - 1| = %.3e", w_det));
  if (!(w_rec < 1e-8)) o.fail(fmt("reconstruction %.3e", w_rec));

  const CMatrix t = mat_T(), j = mat_J();
  double w_id = max_diff(t.transpose() * t, kron(j, j));
  for (int k = 0; k < 100; ++k) {
    const CMatrix a = random_matrix(2, 2, rng);
    w_id = std::max(w_id, max_diff(a.transpose() * j * a, det(a) * j));
  }
  if (!(w_id < 1e-12)) o.fail(fmt("identity error %.3e", w_id));

  double w_comm = 0.0;
  for (std::size_t k = 1; k <= 6; ++k) {
    const CMatrix s = symmetrized_jordan_block(k, rng.complex_normal());
    for (const auto& b : jordan_stabilizer_basis(k)) w_comm = std::max(w_comm, (b * s - s * b).frobenius_norm());
  }
  if (!(w_comm < 1e-12)) o.fail(fmt("stabilizer commutator %.3e", w_comm));
  if (o.ok)
    o.detail = fmt("orthogonality %.1e, ", w_orth) + fmt("reconstruction %.1e, ", w_rec) +
               fmt("identities %.1e, ", w_id) + fmt("commutators %.1e", w_comm);
  return o;
}

Outcome ghz_genericity() {
  Outcome o;
  Rng rng(109);
  double w_span = 0.0, w_mod = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const CTensor t = random_qubits(3, rng);
    try {
      const auto a = ghz_normal_form(t, 1e-7);
      const auto b = ghz_normal_form(multilinear_apply(t, sl2s(3, rng)), 1e-7);
      w_span = std::max({w_span, a.span_residual, b.span_residual});
      const double rel = std::abs(std::abs(a.coefficient) - std::abs(b.coefficient)) / std::abs(a.coefficient);
      w_mod = std::max(w_mod, rel);
    } catch (const Error& e) {
      o.fail(std::string("trial raised ") + e.what());
    }
  }
  if (!(w_span < 1e-7)) o.fail(fmt("span residual %.3e", w_span));
  if (!(w_mod < 1e-6)) o.fail(fmt("coefficient modulus drift %.3e", w_mod));
  if (o.ok) o.detail = fmt("span residual %.1e, ", w_span) + fmt("modulus drift %.1e", w_mod);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"3-qubit orbit table", table_reproduction},
      {"matrix-multiplication tensor", matrix_multiplication_tensor},
      {"odd genericity witness", witness},
      {"orbit invariance", orbit_invariance},
      {"reconstruction and structure", reconstruction_and_structure},
      {"Kraus solution independence", kraus_independence},
      {"matrix-case oracle", matrix_case},
      {"linear-algebra kernel", linear_algebra_kernel},
      {"GHZ genericity", ghz_genericity},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected exception: ") + e.what());
    }
    std::printf("[%s] %d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
