#pragma once

#include "alpha.hpp"
#include "chromatic.hpp"
#include "symfun.hpp"

#include <json.hpp>

namespace qchrom {

using nlohmann::json;

json to_json(const ZPolyQ& p);      // [[exp, "coeff"], ...] ascending
json to_json(const RatQ& r);        // ZPolyQ form, or {"num":..., "den":...}
json to_json(const Partition& p);   // [3,1]
json to_json(const DyckPath& p);    // [2,3,3]
json to_json(const SymFun& f);      // {"degree","basis","terms"}
json to_json(const AlphaElem& e);   // {"t_coeffs": [[k, coeff], ...]}
json to_json(const AlphaExpansion& e);
json to_json(const AlphaSymFun& f);
json to_json(const FExpansion& fe);

ZPolyQ zpoly_from_json(const json& j);
RatQ ratq_from_json(const json& j);
Partition partition_from_json(const json& j);
DyckPath path_from_json(const json& j);
SymFun symfun_from_json(const json& j);
AlphaElem alpha_elem_from_json(const json& j);

} // namespace qchrom
