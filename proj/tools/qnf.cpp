// qnf: command-line front end for the normal-form library.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 non-generic input (the error
// name is printed on stdout), 3 inequivalent / verification failed.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnf/error.hpp"
#include "qnf/hosvd.hpp"
#include "qnf/io.hpp"
#include "qnf/lu_nf.hpp"
#include "qnf/reductions.hpp"
#include "qnf/rng.hpp"
#include "qnf/slocc_nf.hpp"
#include "qnf/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNonGeneric = 2;
constexpr int kMismatch = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") std::cout << text;
  else qnf::write_text(out_path, text);
}

qnf::NormalFormCertificate normal_form(const std::string& group, const qnf::CTensor& t, double tol) {
  if (group == "hosvd") return qnf::hosvd_core(t, tol);
  if (group == "ohosvd") return qnf::ohosvd_core(t, tol);
  if (group == "lu") return qnf::lu_normal_form(t, tol);
  return qnf::slocc_normal_form(t, tol);
}

struct EquivResult {
  bool equivalent;
  std::string detail;
};

EquivResult compare(const std::string& group, const qnf::CTensor& a, const qnf::CTensor& b, double tol,
                    double match_tol) {
  qnf::require(a.dims() == b.dims(), "tensors have different dimensions");
  if (group == "slocc" && a.is_qubit() && a.order() == 3) {
    const auto ca = qnf::classify_3qubit(a, tol), cb = qnf::classify_3qubit(b, tol);
    if (ca.label != cb.label)
      return {false, std::string(to_string(ca.label)) + " vs " + std::string(to_string(cb.label))};
    if (ca.label != qnf::OrbitClass3::GHZ) return {true, std::string(to_string(ca.label))};
    const qnf::cplx x = qnf::ghz_normal_form(a, tol).coefficient;
    const qnf::cplx y = qnf::ghz_normal_form(b, tol).coefficient;
    const double diff = std::abs(x - y) / std::max(std::abs(x), std::abs(y));
    return {diff <= match_tol, "GHZ coefficient difference " + std::to_string(diff)};
  }
  const auto na = normal_form(group, a, tol), nb = normal_form(group, b, tol);
  const double diff = qnf::relative_max_diff(na.core, nb.core);
  return {diff <= match_tol, "normal form difference " + std::to_string(diff)};
}

std::string invariants_json(const qnf::CTensor& t, double tol) {
  qnf::require(t.is_qubit() && t.order() >= 2, "invariants need a qubit tensor with n >= 2");
  nlohmann::json j;
  j["det_pi"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.order(); ++i) {
    const qnf::cplx d = qnf::slocc_invariant_det(t, i);
    j["det_pi"].push_back({d.real(), d.imag()});
  }
  if (t.order() == 3) {
    try {
      const auto c = qnf::classify_3qubit(t, tol);
      j["ranks"] = c.ranks;
      j["class"] = std::string(to_string(c.label));
    } catch (const qnf::Error& e) {
      j["class"] = nullptr;
      j["class_error"] = std::string(to_string(e.kind()));
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms of complex tensors under local unitary and SLOCC actions"};
  app.require_subcommand(1);

  double tol = qnf::kDefaultTol;
  app.add_option("--tol", tol, "Tolerance for every genericity and rank decision")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string input, out_path;
  std::string cmd_group;
  std::vector<CLI::App*> nf_cmds;
  for (const char* name : {"hosvd", "ohosvd", "lu", "slocc"}) {
    auto* sub = app.add_subcommand(name, std::string("Compute the ") + name + " normal form certificate");
    sub->add_option("input", input, "Tensor file")->required();
    sub->add_option("-o,--output", out_path, "Certificate file (stdout if omitted)");
    sub->fallthrough();
    nf_cmds.push_back(sub);
  }

  auto* classify = app.add_subcommand("classify3", "SLOCC class of a 3-qubit tensor");
  classify->add_option("input", input, "Tensor file")->required();
  classify->fallthrough();

  std::string eq_group, path_b;
  double match_tol = 1e-6;
  auto* equiv = app.add_subcommand("equiv", "Decide orbit equivalence of two tensors");
  equiv->add_option("group", eq_group, "lu or slocc")->required()->check(CLI::IsMember({"lu", "slocc"}));
  equiv->add_option("a", input, "First tensor file")->required();
  equiv->add_option("b", path_b, "Second tensor file")->required();
  equiv->add_option("--match-tol", match_tol, "Relative entrywise tolerance for comparing normal forms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  equiv->fallthrough();

  auto* invariants = app.add_subcommand("invariants", "Print det(pi_i) and, for 3 qubits, ranks and class");
  invariants->add_option("input", input, "Tensor file")->required();
  invariants->fallthrough();

  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "Write a tensor with standard normal real and imaginary parts");
  random->add_option("--dims", dims, "Comma-separated dimensions")->required()->delimiter(',');
  random->add_option("--seed", seed, "Seed for mt19937_64")->capture_default_str();
  random->add_option("-o,--output", out_path, "Tensor file (stdout if omitted)");
  random->fallthrough();

  std::size_t witness_n = 0;
  auto* witness = app.add_subcommand("witness", "Write the odd-qubit genericity witness");
  witness->add_option("n", witness_n, "Odd number of qubits, at least 5")->required();
  witness->add_option("-o,--output", out_path, "Tensor file (stdout if omitted)");
  witness->fallthrough();

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against its input tensor");
  verify->add_option("certificate", cert_path, "Certificate file")->required();
  verify->add_option("--input", input, "Tensor the certificate claims to reconstruct")->required();
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto* sub : nf_cmds) {
      if (!sub->parsed()) continue;
      const qnf::CTensor t = qnf::read_tensor(input);
      emit(qnf::certificate_to_string(normal_form(sub->get_name(), t, tol)), out_path);
      return kOk;
    }
    if (classify->parsed()) {
      const auto c = qnf::classify_3qubit(qnf::read_tensor(input), tol);
      std::cout << to_string(c.label) << " ranks " << c.ranks[0] << " " << c.ranks[1] << " " << c.ranks[2] << "\n";
      return kOk;
    }
    if (equiv->parsed()) {
      const auto r = compare(eq_group, qnf::read_tensor(input), qnf::read_tensor(path_b), tol, match_tol);
      std::cout << (r.equivalent ? "equivalent" : "inequivalent") << " (" << r.detail << ")\n";
      return r.equivalent ? kOk : kMismatch;
    }
    if (invariants->parsed()) {
      std::cout << invariants_json(qnf::read_tensor(input), tol);
      return kOk;
    }
    if (random->parsed()) {
      qnf::Rng rng(seed);
      emit(qnf::tensor_to_string(qnf::random_tensor(dims, rng)), out_path);
      return kOk;
    }
    if (witness->parsed()) {
      emit(qnf::tensor_to_string(qnf::genericity_witness(witness_n)), out_path);
      return kOk;
    }
    if (verify->parsed()) {
      const auto report = qnf::verify_certificate(qnf::read_tensor(input), qnf::read_certificate(cert_path), tol);
      if (report.ok()) {
        std::cout << "ok residual " << report.residual << "\n";
        return kOk;
      }
      std::cout << "failed\n";
      for (const auto& f : report.failures) std::cout << "  " << f << "\n";
      return kMismatch;
    }
  } catch (const qnf::Error& e) {
    if (e.non_generic()) {
      std::cout << to_string(e.kind()) << "\n";
      std::cerr << "qnf: non-generic input: " << e.what() << "\n";
      return kNonGeneric;
    }
    std::cerr << "qnf: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qnf: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
