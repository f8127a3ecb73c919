#pragma once

#include <json.hpp>

#include "nanoword/param_expr.hpp"

namespace nanoword {

/// {"1": "p/q", "a+": "p/q", "a+^2 a-": "p/q", ...}; zero renders as
/// {"1": "0"}. Keys come out lexicographic.
nlohmann::json ring_to_json(const RingElem& e);

/// {"const": <ringelem>, "coeffs": {"s": <ringelem>, ...}}; zero parameter
/// coefficients are omitted.
nlohmann::json expr_to_json(const ParamExpr& e);

}  // namespace nanoword
