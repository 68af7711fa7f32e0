#ifndef SPECCERT_CERTIFICATE_HPP
#define SPECCERT_CERTIFICATE_HPP

// Deterministic "v1" certificate documents. A document is a header (format
// tag, content hash, verbatim job echo) followed by one certificate block
// per requested value. Byte-identical across runs: no timestamps, no
// wall-clock timing, fixed ordering.

#include "speccert/extend.hpp"

#include <cstdint>
#include <string>

namespace speccert {

uint64_t fnv1a64(const std::string& data);
std::string hex64(uint64_t v);

// Header: format line, input-hash line, input-begin/.../input-end echo.
std::string render_document_header(const std::string& canonical_job_text);

// One "certificate N ... end" block, index is 1-based input order.
std::string render_certificate(const InjectivityCertificate& cert, size_t index);

// Recovers the job echo between input-begin and input-end; false when the
// document is not a well-formed v1 certificate.
bool extract_embedded_job(const std::string& document, std::string* job_text);

}  // namespace speccert

#endif
