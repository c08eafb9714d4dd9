#include "sphandle/json_io.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>

#include "sphandle/error.hpp"

namespace sphandle {

json to_json(const FiniteQuandle& q) {
  return json{{"n", q.n}, {"table", q.table}};
}

FiniteQuandle finite_quandle_from_json(const json& j) {
  FiniteQuandle q;
  try {
    q.n = j.at("n").get<int>();
    q.table = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("quandle json: ") + e.what());
  }
  return q;
}

json to_json(const UnitQuaternion& q) {
  return json{{"w", q.w}, {"x", q.x}, {"y", q.y}, {"z", q.z}};
}

UnitQuaternion quaternion_from_json(const json& j) {
  try {
    return {j.at("w").get<double>(), j.at("x").get<double>(),
            j.at("y").get<double>(), j.at("z").get<double>()};
  } catch (const json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("quaternion json: ") + e.what());
  }
}

json to_json(const TangentVector& v) {
  return json{{"v", {v.v.x, v.v.y, v.v.z}}};
}

TangentVector tangent_from_json(const json& j) {
  try {
    const auto arr = j.at("v");
    if (!arr.is_array() || arr.size() != 3) {
      fail(ErrorKind::MalformedInput, "tangent json: \"v\" must have 3 entries");
    }
    return {arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
  } catch (const json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("tangent json: ") + e.what());
  }
}

json to_json(const SpherePoint& p) {
  return json{{"u", {p.u.x, p.u.y, p.u.z}}};
}

json to_json(const SphericalQuandleTag& tag) {
  return json{{"presentation", to_string(tag.presentation)}, {"param", tag.param}};
}

json to_json(const KnotDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings) crossings.push_back({c[0], c[1], c[2], c[3]});
  return json{{"crossings", crossings}, {"signs", d.signs}};
}

json to_json(const SphericalColoring& c) {
  json arcs = json::array();
  for (const auto& v : c.colors) arcs.push_back(to_json(v));
  return json{{"arcs", arcs},
              {"residual", c.residual},
              {"class", to_string(classify(c))}};
}

SphericalColoring coloring_from_json(const json& j, double r) {
  SphericalColoring c;
  c.r = r;
  try {
    for (const auto& arc : j.at("arcs")) c.colors.push_back(tangent_from_json(arc));
    c.residual = j.value("residual", 0.0);
  } catch (const json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("coloring json: ") + e.what());
  }
  return c;
}

json to_json(const SU2Representation& rho, bool with_matrix) {
  json gens = json::array();
  for (std::size_t k = 0; k < rho.images.size(); ++k) {
    json g{{"arc", static_cast<int>(k)}, {"q", to_json(rho.images[k])}};
    if (with_matrix) {
      const auto m = rho.images[k].matrix();
      g["m"] = {{m[0][0], m[0][1]},
                {m[1][0], m[1][1]},
                {m[2][0], m[2][1]},
                {m[3][0], m[3][1]}};
    }
    gens.push_back(g);
  }
  return json{{"generators", gens}, {"max_relation_error", rho.max_relation_error}};
}

json to_json(const AuditReport& report) {
  json clauses = json::array();
  for (const auto& c : report.clauses) {
    clauses.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
  }
  return json{{"clauses", clauses}, {"all_pass", report.all_pass()}};
}

json to_json(const RunManifest& m) {
  return json{{"command", m.command},     {"knot", m.knot},
              {"parameters", m.parameters}, {"config", m.config},
              {"tool_version", m.tool_version}, {"seed", m.seed},
              {"timestamp", m.timestamp}};
}

std::string manifest_timestamp() {
  std::time_t t;
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

FiniteQuandle load_finite_quandle(const std::string& source) {
  auto parse_sized = [&](const std::string& prefix) -> int {
    if (source.rfind(prefix, 0) != 0) return -1;
    const std::string digits = source.substr(prefix.size());
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      return -1;
    }
    return std::atoi(digits.c_str());
  };

  if (const int n = parse_sized("dihedral"); n >= 0) return dihedral(n);
  if (const int n = parse_sized("trivial"); n >= 0) return trivial(n);

  std::ifstream in(source);
  if (!in) {
    fail(ErrorKind::MalformedInput, "cannot open quandle file '" + source + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::MalformedInput, std::string("quandle file: ") + e.what());
  }
  return finite_quandle_from_json(j);
}

}  // namespace sphandle
