#include <doctest.h>

#include <algorithm>
#include <set>

#include "sphandle/knot.hpp"
#include "test_util.hpp"

using namespace sphandle;
using sphandle_test::thrown_kind;

namespace {

// trefoil # trefoil, spliced along one edge of each summand
const char* kGrannyPd =
    "[[1,4,2,5],[3,12,4,1],[5,2,6,3],[6,9,7,10],[8,11,9,12],[10,7,11,8]]";

}  // namespace

TEST_CASE("parse_pd on the standard trefoil") {
  const KnotDiagram d = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
  CHECK(d.n_crossings() == 3);
  CHECK(d.n_arcs == 3);
  CHECK(d.signs == std::vector<int>{1, 1, 1});

  // one relation per crossing, each conjugating one generator into another
  REQUIRE(d.relations.size() == 3);
  const std::set<int> arcs{d.relations[0].in_arc, d.relations[0].over_arc,
                           d.relations[0].out_arc};
  CHECK(arcs.size() == 3);  // three distinct arcs at each trefoil crossing

  // the cyclic structure (a,b,c),(b,c,a),(c,a,b) up to labeling
  for (const auto& rel : d.relations) {
    CHECK(rel.in_arc != rel.over_arc);
    CHECK(rel.out_arc != rel.in_arc);
  }
}

TEST_CASE("parse_pd on the figure-eight") {
  const KnotDiagram d = parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]");
  CHECK(d.n_crossings() == 4);
  CHECK(d.n_arcs == 4);
  const int pluses = static_cast<int>(std::count(d.signs.begin(), d.signs.end(), 1));
  CHECK(pluses == 2);  // mixed signs
}

TEST_CASE("parse_pd edge cases") {
  SUBCASE("one-crossing kink is accepted with a single arc") {
    const KnotDiagram d = parse_pd("[[1,1,2,2]]");
    CHECK(d.n_crossings() == 1);
    CHECK(d.n_arcs == 1);
  }
  SUBCASE("empty text") {
    CHECK(thrown_kind([] { parse_pd("  \n"); }) == ErrorKind::EmptyDiagram);
    CHECK(thrown_kind([] { parse_pd(""); }) == ErrorKind::EmptyDiagram);
  }
  SUBCASE("[] is the unknot") {
    const KnotDiagram d = parse_pd("[]");
    CHECK(d.n_crossings() == 0);
    CHECK(d.n_arcs == 1);
    CHECK(d.relations.empty());
  }
  SUBCASE("bad multiplicities") {
    CHECK(thrown_kind([] { parse_pd("[[1,1,1,2]]"); }) == ErrorKind::MalformedPd);
    CHECK(thrown_kind([] { parse_pd("[[1,2,3]]"); }) == ErrorKind::MalformedPd);
    CHECK(thrown_kind([] { parse_pd("[[1,4,2,9],[3,6,4,1],[5,2,6,3]]"); }) ==
          ErrorKind::MalformedPd);
    CHECK(thrown_kind([] { parse_pd("not a pd"); }) == ErrorKind::MalformedPd);
  }
  SUBCASE("broken orientation trace") {
    CHECK(thrown_kind([] { parse_pd("[[1,2,1,2]]"); }) ==
          ErrorKind::OrientationError);
  }
}

TEST_CASE("builtins") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const KnotDiagram d = builtin(name);
    CHECK(d.name == name);
    if (name == "unknot") {
      CHECK(d.n_crossings() == 0);
      continue;
    }
    // arc count equals crossing count for a knot diagram
    CHECK(d.n_arcs == d.n_crossings());
    // every arc actually carries some edge
    std::set<int> arcs;
    for (std::size_t e = 1; e < d.arc_of_edge.size(); ++e) arcs.insert(d.arc_of_edge[e]);
    CHECK(static_cast<int>(arcs.size()) == d.n_arcs);
  }
  CHECK(builtin("trefoil").n_crossings() == 3);
  CHECK(thrown_kind([] { builtin("7_99"); }) == ErrorKind::UnknownName);
}

TEST_CASE("wirtinger presentations") {
  SUBCASE("trefoil") {
    const WirtingerPresentation p = wirtinger(builtin("trefoil"));
    CHECK(p.n_generators == 3);
    CHECK(p.relations.size() == 3);
    CHECK(p.meridian_index == 0);
    CHECK(p.abelianization_is_cyclic());
  }
  SUBCASE("unknot") {
    const WirtingerPresentation p = wirtinger(builtin("unknot"));
    CHECK(p.n_generators == 1);
    CHECK(p.relations.empty());
    CHECK(p.abelianization_is_cyclic());
  }
  SUBCASE("figure-eight has mixed signs") {
    const WirtingerPresentation p = wirtinger(builtin("figure8"));
    CHECK(p.n_generators == 4);
    CHECK(p.relations.size() == 4);
    bool has_plus = false, has_minus = false;
    for (const auto& r : p.relations) {
      (r.sign > 0 ? has_plus : has_minus) = true;
    }
    CHECK(has_plus);
    CHECK(has_minus);
  }
  SUBCASE("abelianization is cyclic for every builtin") {
    for (const auto& name : builtin_names()) {
      CAPTURE(name);
      CHECK(wirtinger(builtin(name)).abelianization_is_cyclic());
    }
  }
}

TEST_CASE("quandle relation sets") {
  CHECK(quandle_relations(builtin("trefoil")).triples.size() == 3);
  CHECK(quandle_relations(builtin("unknot")).triples.empty());

  const KnotDiagram granny = parse_pd(kGrannyPd);
  CHECK(granny.n_crossings() == 6);
  CHECK(granny.n_arcs == 6);
  CHECK(quandle_relations(granny).triples.size() == 6);
  CHECK(wirtinger(granny).abelianization_is_cyclic());
}

TEST_CASE("pd text round trip") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const KnotDiagram d = builtin(name);
    const KnotDiagram back = parse_pd(d.pd_text());
    CHECK(back == d);
  }
  const KnotDiagram granny = parse_pd(kGrannyPd);
  CHECK(parse_pd(granny.pd_text()) == granny);
}
