#include "qnf/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qnf/error.hpp"

namespace qnf {

using nlohmann::json;

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::InvalidArgument, "complex value must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json tensor_json(const CTensor& t) {
  json entries = json::array();
  for (const auto& z : t.entries()) entries.push_back(complex_json(z));
  return {{"dims", t.dims()}, {"entries", std::move(entries)}};
}

CTensor tensor_from(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("entries"))
    throw Error(ErrorKind::InvalidArgument, "tensor needs 'dims' and 'entries'");
  std::vector<std::size_t> dims;
  for (const auto& d : j.at("dims")) {
    if (!d.is_number_integer() || d.get<long long>() <= 0)
      throw Error(ErrorKind::InvalidArgument, "dims must be positive integers");
    dims.push_back(d.get<std::size_t>());
  }
  std::vector<cplx> entries;
  for (const auto& e : j.at("entries")) entries.push_back(complex_from(e));
  return CTensor(std::move(dims), std::move(entries));
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidArgument, "matrix must be a nonempty array of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  std::vector<cplx> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw Error(ErrorKind::InvalidArgument, "matrix rows differ in length");
    for (const auto& e : row) entries.push_back(complex_from(e));
  }
  return CMatrix(rows, cols, std::move(entries));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string tensor_to_string(const CTensor& t) { return tensor_json(t).dump() + "\n"; }

CTensor tensor_from_string(std::string_view text) {
  try {
    return tensor_from(parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad tensor file: ") + e.what());
  }
}

std::string certificate_to_string(const NormalFormCertificate& cert) {
  json factors = json::array();
  for (const auto& f : cert.factors.factors) factors.push_back(matrix_json(f));
  json gaps = json::array();
  for (double g : cert.gaps) gaps.push_back(std::isfinite(g) ? json(g) : json(nullptr));
  json j = {{"group", cert.group},
            {"factor_group", std::string(to_string(cert.factors.tag))},
            {"core", tensor_json(cert.core)},
            {"factors", std::move(factors)},
            {"residual", cert.residual},
            {"diagnostics", {{"min_eigenvalue_gaps", std::move(gaps)}}}};
  if (!cert.basis.empty()) {
    json basis = json::array();
    for (auto v : cert.basis) basis.push_back(bitstring(v, cert.core.order()));
    j["basis"] = std::move(basis);
  }
  if (cert.coefficient) j["coefficient"] = complex_json(*cert.coefficient);
  if (cert.orbit_class) j["class"] = *cert.orbit_class;
  return j.dump(2) + "\n";
}

NormalFormCertificate certificate_from_string(std::string_view text) {
  try {
    const json j = parse(text);
    NormalFormCertificate cert;
    cert.group = j.at("group").get<std::string>();
    cert.factors.tag = group_tag_from_string(j.at("factor_group").get<std::string>());
    cert.core = tensor_from(j.at("core"));
    for (const auto& f : j.at("factors")) cert.factors.factors.push_back(matrix_from(f));
    cert.residual = j.at("residual").get<double>();
    if (j.contains("diagnostics") && j["diagnostics"].contains("min_eigenvalue_gaps"))
      for (const auto& g : j["diagnostics"]["min_eigenvalue_gaps"])
        cert.gaps.push_back(g.is_null() ? INFINITY : g.get<double>());
    if (j.contains("basis"))
      for (const auto& b : j["basis"]) cert.basis.push_back(parse_bitstring(b.get<std::string>()));
    if (j.contains("coefficient")) cert.coefficient = complex_from(j["coefficient"]);
    if (j.contains("class")) cert.orbit_class = j["class"].get<std::string>();
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad certificate file: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

CTensor read_tensor(const std::filesystem::path& path) { return tensor_from_string(read_text(path)); }
void write_tensor(const std::filesystem::path& path, const CTensor& t) { write_text(path, tensor_to_string(t)); }
NormalFormCertificate read_certificate(const std::filesystem::path& path) {
  return certificate_from_string(read_text(path));
}
void write_certificate(const std::filesystem::path& path, const NormalFormCertificate& cert) {
  write_text(path, certificate_to_string(cert));
}

}  // namespace qnf
