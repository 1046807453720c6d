#pragma once

#include <json.hpp>

#include "qtcsf/coeff.hpp"
#include "qtcsf/graphs.hpp"
#include "qtcsf/symfn.hpp"
#include "qtcsf/xpoly.hpp"

namespace qtcsf {

using json = nlohmann::ordered_json;

// Integers outside the int64 range are written as decimal strings.
// Readers throw DomainError on malformed input.

json to_json(const QTLaurent& p);
json to_json(const QTCoeff& c);   // {"num":[[c,qe,te],...],"den":[...]}
json to_json(const XPoly& f);     // {"m":3,"terms":[{"exp":[..],"coeff":..}]}
json to_json(const EExpansion& e);  // {"n":3,"coeffs":[{"partition":[..],"coeff":..}]}
json to_json(const OrientedGraph& g);  // {"n":3,"edges":[[1,2],[2,3]]}

QTLaurent laurent_from_json(const json& j);
QTCoeff qtcoeff_from_json(const json& j);
XPoly xpoly_from_json(const json& j);
EExpansion eexpansion_from_json(const json& j);
OrientedGraph graph_from_json(const json& j);

}  // namespace qtcsf
