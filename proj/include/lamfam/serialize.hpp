#pragma once

#include "json.hpp"
#include "lamfam/family.hpp"
#include "lamfam/lambda_open.hpp"
#include "lamfam/props.hpp"

namespace lamfam {

/// {"family", "sizes": [{"n", "base_count", "structured_count", "roundtrips_ok", ...}], "pass"}
nlohmann::json to_json(AuditReport const& report);

/// Timing is left out so that equal runs serialize identically.
nlohmann::json to_json(SuiteReport const& report);

// {"var": i} | {"lam": t} | {"app": [t, t]}
nlohmann::json to_json(Lmt const& t);
/// Throws lamfam::Error on malformed input.
Lmt lmt_from_json(nlohmann::json const& j);

}  // namespace lamfam
