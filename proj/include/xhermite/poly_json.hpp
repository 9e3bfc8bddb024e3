#pragma once

#include <nlohmann/json.hpp>

#include "xhermite/scaled_poly.hpp"

namespace xhermite {

/// {"scale_exp": e, "arity": a, "terms": [{"dx", "dy", "num", "den"}, ...]}
/// with terms sorted by (dx, dy) ascending and num/den as decimal strings.
nlohmann::json to_json(const ScaledPoly& p);
ScaledPoly poly_from_json(const nlohmann::json& j);

}  // namespace xhermite
