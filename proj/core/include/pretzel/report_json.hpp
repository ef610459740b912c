#pragma once

#include "json.hpp"
#include "pretzel/classify.hpp"

namespace pretzel {

// Stable JSON schema for classification reports, version "1". Polynomials
// are carried in the canonical text format; parsing and re-serializing a
// report is the identity on the emitted bytes.
nlohmann::ordered_json report_to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const nlohmann::ordered_json& j);

} // namespace pretzel
