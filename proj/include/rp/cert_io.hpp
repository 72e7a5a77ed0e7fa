#pragma once

#include "rp/certificates.hpp"
#include "rp/semistar.hpp"

#include <memory>
#include <string>

namespace rp {

// Certificate schema v1: JSON with a `kind` tag in
// {singleton, path, split, join, replacement}; vertex sets as sorted integer
// arrays; a `version` field on the root object. Signature certificates are a
// node table keyed by canonical signature strings. Lossless round-trip.

std::string serialize_certificate(const RpCertificate& cert);
// Schema violations raise parse_error with the JSON path of the offending node.
RpCertPtr parse_certificate(const std::string& text);

std::string serialize_signature_certificate(const SignatureCertificate& cert);
std::shared_ptr<const SignatureCertificate> parse_signature_certificate(const std::string& text);

} // namespace rp
