#pragma once

// JSON forms for every CLI output.  Exact values are carried as decimal-free
// rational strings and cyclotomic coefficient vectors so that emitted JSON
// re-parses to equal values; float renderings sit alongside for human use.

#include "sl3cat/condense.hpp"
#include "sl3cat/witt.hpp"

#include <json.hpp>

namespace sl3cat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// Pinned conventions recorded in every report header.
Json report_header(const std::string& command);

Json cyclo_json(const Cyclo& value, bool with_float = true);
Cyclo cyclo_from_json(const Json& j);

Json weight_json(Weight w);
Weight weight_from_json(const Json& j);

Json alcove_json(int k);

Json fusion_json(const FusionTable& table);
std::string fusion_csv(const FusionTable& table);

Json modular_json(const ModularData& data, bool exact, bool floats);
std::string modular_csv(const ModularData& data, int precision);

Json condense_json(const CondensedData& data, const FusionRing* resolved);
Json certificate_json(const CertificateReport& report);
Json invariant_json(const InvariantReport& report, int k);
Json muger_json(const MugerReport& report);

Json ledger_json(const LedgerReport& report);
Json expected_pattern_json();

} // namespace sl3cat
