#include "sphandle/knot.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sphandle/error.hpp"

namespace sphandle {

namespace {

using nlohmann::json;

// Union-find over 1-based edge labels.
class EdgeSets {
 public:
  explicit EdgeSets(int n_edges) : parent_(n_edges + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int e) {
    while (parent_[e] != e) {
      parent_[e] = parent_[parent_[e]];
      e = parent_[e];
    }
    return e;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::string KnotDiagram::pd_text() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    if (i) out << ",";
    out << "[" << crossings[i][0] << "," << crossings[i][1] << ","
        << crossings[i][2] << "," << crossings[i][3] << "]";
  }
  out << "]";
  return out.str();
}

KnotDiagram parse_pd(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    fail(ErrorKind::EmptyDiagram, "parse_pd: empty input");
  }

  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::MalformedPd, std::string("parse_pd: ") + e.what());
  }
  if (!j.is_array()) fail(ErrorKind::MalformedPd, "parse_pd: expected a list of 4-tuples");

  KnotDiagram d;
  d.name = "pd";
  for (const auto& tup : j) {
    if (!tup.is_array() || tup.size() != 4) {
      fail(ErrorKind::MalformedPd, "parse_pd: each crossing needs exactly 4 labels");
    }
    std::array<int, 4> c{};
    for (int i = 0; i < 4; ++i) {
      if (!tup[i].is_number_integer() || tup[i].get<long long>() < 1) {
        fail(ErrorKind::MalformedPd, "parse_pd: labels must be positive integers");
      }
      c[i] = tup[i].get<int>();
    }
    d.crossings.push_back(c);
  }

  const int n = d.n_crossings();
  if (n == 0) {
    // 0-crossing unknot: one arc, no relations
    d.n_arcs = 1;
    d.arc_of_edge.assign(1, 0);
    return d;
  }

  const int n_edges = 2 * n;
  std::vector<int> count(n_edges + 1, 0);
  for (const auto& c : d.crossings) {
    for (int e : c) {
      if (e > n_edges) {
        std::ostringstream msg;
        msg << "parse_pd: label " << e << " exceeds 2n = " << n_edges;
        fail(ErrorKind::MalformedPd, msg.str());
      }
      ++count[e];
    }
  }
  for (int e = 1; e <= n_edges; ++e) {
    if (count[e] != 2) {
      std::ostringstream msg;
      msg << "parse_pd: edge label " << e << " appears " << count[e]
          << " times, expected 2";
      fail(ErrorKind::MalformedPd, msg.str());
    }
  }

  const auto succ = [n_edges](int e) { return e % n_edges + 1; };

  // Orientation trace: under-strand continues a -> c; the over pair must be
  // consecutive in one direction, which also fixes the crossing sign.
  EdgeSets arcs(n_edges);
  for (const auto& c : d.crossings) {
    const int a = c[0], b = c[1], cc = c[2], dd = c[3];
    if (succ(a) != cc) {
      std::ostringstream msg;
      msg << "parse_pd: under-strand " << a << " -> " << cc
          << " does not follow the orientation";
      fail(ErrorKind::OrientationError, msg.str());
    }
    if (succ(b) == dd) {
      d.signs.push_back(+1);  // over-strand runs b -> d
    } else if (succ(dd) == b) {
      d.signs.push_back(-1);  // over-strand runs d -> b
    } else {
      std::ostringstream msg;
      msg << "parse_pd: over pair (" << b << "," << dd << ") is not consecutive";
      fail(ErrorKind::OrientationError, msg.str());
    }
    arcs.unite(b, dd);
  }

  // Arc ids in order of the smallest edge they contain; the meridian arc
  // (through edge 1) is therefore always arc 0.
  std::map<int, int> root_to_arc;
  d.arc_of_edge.assign(n_edges + 1, -1);
  for (int e = 1; e <= n_edges; ++e) {
    const int root = arcs.find(e);
    auto [it, fresh] = root_to_arc.try_emplace(root, static_cast<int>(root_to_arc.size()));
    d.arc_of_edge[e] = it->second;
    (void)fresh;
  }
  d.n_arcs = static_cast<int>(root_to_arc.size());
  if (d.n_arcs != n) {
    std::ostringstream msg;
    msg << "parse_pd: " << d.n_arcs << " arcs for " << n
        << " crossings; not a knot diagram";
    fail(ErrorKind::OrientationError, msg.str());
  }

  for (int i = 0; i < n; ++i) {
    const auto& c = d.crossings[i];
    CrossingRelation rel;
    rel.in_arc = d.arc_of_edge[c[0]];
    rel.over_arc = d.arc_of_edge[c[1]];
    rel.out_arc = d.arc_of_edge[c[2]];
    rel.sign = d.signs[i];
    d.relations.push_back(rel);
  }
  return d;
}

bool WirtingerPresentation::abelianization_is_cyclic() const {
  EdgeSets sets(n_generators);
  for (const auto& r : relations) sets.unite(r.in_arc + 1, r.out_arc + 1);
  const int root = sets.find(1);
  for (int g = 1; g <= n_generators; ++g) {
    if (sets.find(g) != root) return false;
  }
  return true;
}

WirtingerPresentation wirtinger(const KnotDiagram& d) {
  WirtingerPresentation p;
  p.n_generators = d.n_arcs;
  p.relations = d.relations;
  p.meridian_index = 0;
  return p;
}

QuandleRelationSet quandle_relations(const KnotDiagram& d) {
  QuandleRelationSet s;
  s.n_arcs = d.n_arcs;
  s.triples = d.relations;
  return s;
}

namespace {

const std::vector<std::pair<std::string, std::string>>& builtin_table() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"unknot", "[]"},
      {"trefoil", "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"},
      {"figure8", "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"},
      {"5_1", "[[1,6,2,7],[3,8,4,9],[5,10,6,1],[7,2,8,3],[9,4,10,5]]"},
      {"5_2", "[[1,4,2,5],[3,8,4,9],[5,10,6,1],[9,6,10,7],[7,2,8,3]]"},
      {"6_1", "[[1,4,2,5],[7,10,8,11],[3,9,4,8],[9,3,10,2],[5,12,6,1],[11,6,12,7]]"},
  };
  return table;
}

}  // namespace

KnotDiagram builtin(const std::string& name) {
  for (const auto& [key, pd] : builtin_table()) {
    if (key == name) {
      KnotDiagram d = parse_pd(pd);
      d.name = name;
      return d;
    }
  }
  std::ostringstream msg;
  msg << "unknown builtin knot '" << name << "'; available:";
  for (const auto& [key, pd] : builtin_table()) msg << " " << key;
  fail(ErrorKind::UnknownName, msg.str());
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [key, pd] : builtin_table()) names.push_back(key);
  return names;
}

}  // namespace sphandle
