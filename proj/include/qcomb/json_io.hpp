#pragma once

#include "qcomb/laurent.hpp"
#include "qcomb/verifier.hpp"

#include <json.hpp>

namespace qcomb {

/// Polynomial as an array of [exponent, coefficient] pairs in ascending
/// exponent order; coefficients outside the int64 range become decimal
/// strings.
nlohmann::json poly_to_json(const LaurentPoly& poly);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace qcomb
