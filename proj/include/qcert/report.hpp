#pragma once

// JSON and plain-text renderings of certificates and reports. Every number
// is written as a decimal string so arbitrary-precision values survive.

#include <json.hpp>
#include <string>

#include "qcert/cusps.hpp"
#include "qcert/orders.hpp"
#include "qcert/prover.hpp"
#include "qcert/rank.hpp"
#include "qcert/series.hpp"

namespace qcert {

inline constexpr const char* kFormatVersion = "1";

nlohmann::json to_json(const CuspTable& table);
nlohmann::json to_json(const OrderReport& report);
nlohmann::json to_json(const ProofCertificate& cert, const std::string& name = "");
nlohmann::json to_json(const CongruenceReport& report);
nlohmann::json to_json(const LValuationReport& report);
/// {"grid", "precision", "coefficients": [[exponent, coefficient], ...]} with nonzero entries only.
nlohmann::json to_json(const Series& s);

std::string to_text(const CuspTable& table);
std::string to_text(const OrderReport& report);
std::string to_text(const ProofCertificate& cert, const std::string& name = "");
std::string to_text(const CongruenceReport& report);
std::string to_text(const Series& s);

/// Wraps a payload with the format version and a document kind.
nlohmann::json document(const std::string& kind, nlohmann::json payload);

}  // namespace qcert
