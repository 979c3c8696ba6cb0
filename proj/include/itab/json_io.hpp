#pragma once

#include <json.hpp>

#include "itab/order_ideal.hpp"
#include "itab/poly.hpp"
#include "itab/tableau.hpp"

namespace itab {

using json = nlohmann::ordered_json;

// {"shape": [...], "bound": m, "rows": [[...], ...]}
json tableau_to_json(const IncreasingTableau& T);
IncreasingTableau tableau_from_json(const json& j);

// {"a": rows, "b": cols, "profile": [...]}
json ideal_to_json(const OrderIdeal& J);
OrderIdeal ideal_from_json(const json& j);

// Coefficients lowest degree first, as decimal strings (coefficients can
// exceed any machine-word range).
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

}  // namespace itab
