#pragma once

#include <json.hpp>

#include "warpspace/audit.hpp"
#include "warpspace/complexes.hpp"
#include "warpspace/groups.hpp"
#include "warpspace/quotient.hpp"
#include "warpspace/space.hpp"

namespace warpspace {

// All serialization uses ordered maps and fixed key order, so dumps are
// byte-stable for identical inputs.
using Json = nlohmann::ordered_json;

Json space_to_json(const SpaceDescriptor& s);
SpacePtr space_from_json(const Json& j);

Json point_to_json(const PointCoord& p);
PointCoord point_from_json(const Json& j);

Json path_to_json(const PolyPath& p);
PolyPath path_from_json(const Json& j);

Json map_to_json(const MapDescriptor& m);
MapDescriptor map_from_json(const Json& j);

Json warp_to_json(const WarpVector& w);
WarpVector warp_from_json(const Json& j);

Json gos_to_json(const GraphOfSpacesSpec& s);
GraphOfSpacesSpec gos_from_json(const Json& j);

Json gog_to_json(const GraphOfGroupsSpec& s);
GraphOfGroupsSpec gog_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);

Json geodesic_result_to_json(const GeodesicResult& r);

Json net_to_json(const NetGraph& net);

Json audit_report_to_json(const AuditReport& r);
std::string audit_report_to_csv(const AuditReport& r);

} // namespace warpspace
