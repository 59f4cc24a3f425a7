#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qnf/hosvd.hpp"
#include "qnf/tensor.hpp"

namespace qnf {

// JSON tensor file: {"dims": [...], "entries": [[re, im], ...]}. Doubles are
// written in shortest round-trip form, so write-then-read is bit exact.
std::string tensor_to_string(const CTensor& t);
CTensor tensor_from_string(std::string_view text);

// JSON certificate: group, factor tag, core (tensor file layout), factors as
// nested [re, im] arrays, residual, per-mode gaps, optional basis bitstrings,
// coefficient and orbit class.
std::string certificate_to_string(const NormalFormCertificate& cert);
NormalFormCertificate certificate_from_string(std::string_view text);

// Parse failures raise Error(InvalidArgument); I/O failures std::runtime_error.
CTensor read_tensor(const std::filesystem::path& path);
void write_tensor(const std::filesystem::path& path, const CTensor& t);
NormalFormCertificate read_certificate(const std::filesystem::path& path);
void write_certificate(const std::filesystem::path& path, const NormalFormCertificate& cert);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace qnf
