#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "sphandle/quandle.hpp"
#include "test_util.hpp"

using namespace sphandle;
using sphandle_test::thrown_kind;

using sphandle_test::a4_three_cycle_quandle;

TEST_CASE("dihedral and trivial constructors") {
  const FiniteQuandle d3 = dihedral(3);
  CHECK(d3.op(0, 1) == 2);
  CHECK(d3.op(1, 1) == 1);
  CHECK(dihedral(5).op(4, 1) == 3);

  const FiniteQuandle t3 = trivial(3);
  CHECK(t3.op(2, 0) == 2);
  CHECK(trivial(1).op(0, 0) == 0);

  CHECK(thrown_kind([] { dihedral(0); }) == ErrorKind::InvalidSize);
  CHECK(thrown_kind([] { trivial(0); }) == ErrorKind::InvalidSize);
}

TEST_CASE("check_axioms is exhaustive") {
  CHECK(check_axioms(dihedral(3)).all_ok());
  CHECK(check_axioms(trivial(4)).all_ok());
  CHECK(check_axioms(trivial(10)).all_ok());

  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(check_axioms(dihedral(n)).all_ok());
    CHECK(check_axioms(trivial(n)).all_ok());
  }

  SUBCASE("broken Q1 with witness") {
    FiniteQuandle q = trivial(2);
    q.table[0][0] = 1;
    const AxiomReport rep = check_axioms(q);
    CHECK_FALSE(rep.q1_ok);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations[0] == std::vector<int>{0});
  }

  SUBCASE("out-of-range entry is malformed input") {
    FiniteQuandle q = trivial(2);
    q.table[1][0] = 5;
    CHECK(thrown_kind([&] { check_axioms(q); }) == ErrorKind::MalformedInput);
  }
}

TEST_CASE("involutory quandles") {
  CHECK(is_involutory(dihedral(7)));
  CHECK(is_involutory(trivial(3)));
  for (int n = 1; n <= 50; ++n) CHECK(is_involutory(dihedral(n)));

  const FiniteQuandle conj = a4_three_cycle_quandle();
  REQUIRE(conj.n == 4);  // the 3-cycle class of A4 has four elements
  CHECK(check_axioms(conj).all_ok());
  CHECK_FALSE(is_involutory(conj));
}

TEST_CASE("homomorphism checking") {
  SUBCASE("any map into the one-point quandle") {
    FiniteQuandleHom h{dihedral(5), trivial(1), {0, 0, 0, 0, 0}};
    CHECK(check_hom(h).ok);
  }
  SUBCASE("identity map") {
    std::vector<int> id(5);
    std::iota(id.begin(), id.end(), 0);
    CHECK(check_hom({dihedral(5), dihedral(5), id}).ok);
  }
  SUBCASE("S_0 on dihedral(3)") {
    CHECK(check_hom({dihedral(3), dihedral(3), {0, 2, 1}}).ok);
  }
  SUBCASE("a non-homomorphism gets witnesses") {
    const HomReport rep = check_hom({dihedral(3), dihedral(3), {0, 0, 1}});
    CHECK_FALSE(rep.ok);
    CHECK(!rep.violations.empty());
  }
  SUBCASE("size mismatch") {
    CHECK(thrown_kind([] {
            check_hom({dihedral(3), dihedral(3), {0, 1}});
          }) == ErrorKind::MalformedInput);
  }
}

TEST_CASE("inner automorphism group closure") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(inner_automorphism_group(trivial(n)).order == 1);
  }

  // For odd n the translations x -> 2y - x generate the full dihedral
  // symmetry group of the n-gon: products of two reflections reach every
  // rotation because 2 is invertible mod n.
  CHECK(inner_automorphism_group(dihedral(3)).order == 6);
  CHECK(inner_automorphism_group(dihedral(5)).order == 10);
  CHECK(inner_automorphism_group(dihedral(7)).order == 14);

  SUBCASE("every closure element is an automorphism") {
    for (const FiniteQuandle& q : {dihedral(6), a4_three_cycle_quandle()}) {
      const InnerGroup g = inner_automorphism_group(q);
      for (const auto& perm : g.elements) {
        CHECK(check_hom({q, q, perm}).ok);
      }
      for (const auto& gen : g.generators) {
        CHECK(std::find(g.elements.begin(), g.elements.end(), gen) != g.elements.end());
      }
    }
  }
}

TEST_CASE("trivial subquandle images") {
  CHECK(image_is_trivial_subquandle({2}, dihedral(5)));
  CHECK_FALSE(image_is_trivial_subquandle({0, 1}, dihedral(3)));
  CHECK(image_is_trivial_subquandle({0, 2}, dihedral(4)));
  CHECK(thrown_kind([] {
          image_is_trivial_subquandle({7}, dihedral(3));
        }) == ErrorKind::MalformedInput);
}
