#pragma once

#include <array>
#include <string>
#include <vector>

namespace sphandle {

// One crossing relation in arc indices.  At a positive crossing the under
// strand leaves as in |> over; at a negative one as S_over^-1(in).  The group
// relation is x_out = x_over^-sign x_in x_over^sign either way.
struct CrossingRelation {
  int in_arc = 0;
  int over_arc = 0;
  int out_arc = 0;
  int sign = +1;

  bool operator==(const CrossingRelation&) const = default;
};

// Oriented knot diagram from a PD code.  Tuples list edge labels
// counterclockwise starting at the incoming under-strand; labels run 1..2n
// along the orientation.
struct KnotDiagram {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> signs;
  int n_arcs = 1;                 // 1 for the empty diagram (unknot)
  std::vector<int> arc_of_edge;   // indexed by edge label, [0] unused
  std::vector<CrossingRelation> relations;
  std::string name;               // builtin name or "pd"

  int n_crossings() const { return static_cast<int>(crossings.size()); }
  int n_edges() const { return 2 * n_crossings(); }

  // PD text round-trips through parse_pd.
  std::string pd_text() const;

  bool operator==(const KnotDiagram& o) const {
    return crossings == o.crossings && signs == o.signs && n_arcs == o.n_arcs;
  }
};

// Parses "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]".  "[]" is the 0-crossing unknot;
// an empty string is an error, as are labels that do not appear exactly twice
// or fail the orientation trace.
KnotDiagram parse_pd(const std::string& text);

// Wirtinger presentation of the knot group: one generator per arc, one
// conjugation relation per crossing, meridian = the arc through edge 1.
struct WirtingerPresentation {
  int n_generators = 1;
  std::vector<CrossingRelation> relations;
  int meridian_index = 0;

  // True iff identifying in_arc with out_arc across all relations connects
  // every generator, i.e. the abelianization is a single infinite cyclic group.
  bool abelianization_is_cyclic() const;
};

WirtingerPresentation wirtinger(const KnotDiagram& d);

// The per-crossing coloring constraints; same triples as the diagram carries.
struct QuandleRelationSet {
  int n_arcs = 1;
  std::vector<CrossingRelation> triples;
};

QuandleRelationSet quandle_relations(const KnotDiagram& d);

// Stored diagrams: unknot, trefoil, figure8, 5_1, 5_2, 6_1.
KnotDiagram builtin(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace sphandle
