#pragma once

// JSON views of the library's report structs.

#include "lpadic/certify.hpp"
#include "lpadic/irrat.hpp"
#include "lpadic/lvalues.hpp"

#include "json.hpp"

namespace lpadic {

nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const PadeOrderResult& r);
nlohmann::json to_json(const CertificateOutcome& r);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const CorollaryEntry& r);
nlohmann::json to_json(const DenominatorAudit& r);
nlohmann::json to_json(const GapDiagnostic& g, std::size_t window = 25);
nlohmann::json to_json(const std::vector<RemainderRow>& rows);

}  // namespace lpadic
