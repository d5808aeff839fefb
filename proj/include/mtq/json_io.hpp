#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "mtq/cone.hpp"
#include "mtq/conic.hpp"
#include "mtq/family.hpp"
#include "mtq/moduli.hpp"

namespace mtq {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"degree": d, "coeffs": ["p/q", ...]} descending; formal_deg pads the list.
Json poly_to_json(const PolyQ& p, int formal_deg = -1);
PolyQ poly_from_json(const Json& j);

Json point1_to_json(const PPoint1& p); // "inf" or "p/q"
PPoint1 point1_from_json(const Json& j);

Json family_to_json(const FamilyParams& params);
FamilyParams family_from_json(const Json& j);

Json star_to_json(const StarVerdict& v);

Json cone_curve_to_json(const ConeCurve& curve);
ConeCurve cone_curve_from_json(const Json& j);

Json mobius_to_json(const Mobius& t);

Json conic_to_json(const PlaneConicF& conic);
Json contact_to_json(const ContactReport& report);
Json node_to_json(const NodeInfo& node);

std::string component_name(RealLocusComponent c);

} // namespace mtq
