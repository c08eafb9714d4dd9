#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "sphandle/correspondence.hpp"
#include "sphandle/knot.hpp"
#include "sphandle/quandle.hpp"
#include "sphandle/solver.hpp"
#include "sphandle/spherical.hpp"
#include "sphandle/su2.hpp"

namespace sphandle {

using json = nlohmann::json;

json to_json(const FiniteQuandle& q);            // {"n":..,"table":[[..]]}
FiniteQuandle finite_quandle_from_json(const json& j);

json to_json(const UnitQuaternion& q);           // {"w":..,"x":..,"y":..,"z":..}
UnitQuaternion quaternion_from_json(const json& j);

json to_json(const TangentVector& v);            // {"v":[..,..,..]}
TangentVector tangent_from_json(const json& j);

json to_json(const SpherePoint& p);              // {"u":[..,..,..]}

json to_json(const SphericalQuandleTag& tag);    // {"presentation":..,"param":..}

json to_json(const KnotDiagram& d);              // {"crossings":[[..]],"signs":[..]}

json to_json(const SphericalColoring& c);        // {"arcs":[{"v":..}],"residual":..,"class":..}
SphericalColoring coloring_from_json(const json& j, double r);

// {"generators":[{"arc":..,"q":{..}}],"max_relation_error":..}; with_matrix
// adds the 2x2 complex matrix as [[re,im] x 4] per generator.
json to_json(const SU2Representation& rho, bool with_matrix = false);

json to_json(const AuditReport& report);

// Embedded in every output file; outputs are a pure function of the manifest.
struct RunManifest {
  std::string command;
  std::string knot;       // builtin name or PD text; empty when not applicable
  json parameters = json::object();
  json config = json::object();
  std::string tool_version;
  std::uint64_t seed = 0;
  std::string timestamp;
};

json to_json(const RunManifest& m);

// ISO-8601 UTC; honors SOURCE_DATE_EPOCH so reruns can be byte-identical.
std::string manifest_timestamp();

// "dihedralN" | "trivialN" | path to a Cayley-table JSON file.
FiniteQuandle load_finite_quandle(const std::string& source);

}  // namespace sphandle
