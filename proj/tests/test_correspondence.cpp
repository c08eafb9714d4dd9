#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphandle/correspondence.hpp"
#include "sphandle/knot.hpp"
#include "sphandle/quandle.hpp"
#include "sphandle/rng.hpp"
#include "sphandle/solver.hpp"
#include "sphandle/spherical.hpp"
#include "test_util.hpp"

using namespace sphandle;
using sphandle_test::thrown_kind;

namespace {

constexpr double kPi = std::numbers::pi;

SphericalColoring trefoil_triangle() {
  const KnotDiagram d = builtin("trefoil");
  const auto colorings = enumerate_finite(d, dihedral(3));
  for (const auto& c : colorings) {
    if (std::adjacent_find(c.assignment.begin(), c.assignment.end(),
                           std::not_equal_to<>()) == c.assignment.end()) {
      continue;
    }
    SphericalColoring out;
    out.r = kPi / 2;
    for (int k : c.assignment) {
      const double ang = 2.0 * kPi * k / 3.0;
      out.colors.emplace_back(Vec3{std::cos(ang), std::sin(ang), 0.0} * (kPi / 2));
    }
    return out;
  }
  REQUIRE(false);
  return {};
}

SphericalColoring constant_coloring(int arcs, double r) {
  SphericalColoring c;
  c.r = r;
  c.colors.assign(arcs, TangentVector::diag(r));
  return c;
}

}  // namespace

TEST_CASE("coloring_to_rep") {
  SUBCASE("constant coloring gives the abelian representation") {
    const double r = 0.9;
    const WirtingerPresentation p = wirtinger(builtin("trefoil"));
    const SU2Representation rho = coloring_to_rep(constant_coloring(3, r), p);
    CHECK(rho.max_relation_error < 1e-14);
    const UnitQuaternion want = exp_tangent(TangentVector::diag(r));
    for (const auto& g : rho.images) CHECK(distance(g, want) < 1e-14);
    CHECK(is_abelian(rho));
  }

  SUBCASE("the equatorial triangle gives trace-zero, noncommuting images") {
    const WirtingerPresentation p = wirtinger(builtin("trefoil"));
    const SU2Representation rho = coloring_to_rep(trefoil_triangle(), p);
    CHECK(rho.max_relation_error < 1e-10);
    for (const auto& g : rho.images) CHECK(std::abs(g.trace()) < 1e-10);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        CHECK(distance(qmul(rho.images[i], rho.images[j]),
                       qmul(rho.images[j], rho.images[i])) > 0.1);
      }
    }
    CHECK_FALSE(is_abelian(rho));
  }

  SUBCASE("unknot: one image, no relations") {
    const WirtingerPresentation p = wirtinger(builtin("unknot"));
    const SU2Representation rho = coloring_to_rep(constant_coloring(1, 1.0), p);
    CHECK(rho.images.size() == 1);
    CHECK(rho.max_relation_error == 0.0);
  }

  SUBCASE("arc count mismatch") {
    const WirtingerPresentation p = wirtinger(builtin("trefoil"));
    CHECK(thrown_kind([&] { coloring_to_rep(constant_coloring(2, 1.0), p); }) ==
          ErrorKind::MalformedInput);
  }

  SUBCASE("a tampered coloring is a correspondence violation") {
    const WirtingerPresentation p = wirtinger(builtin("trefoil"));
    SphericalColoring bad = trefoil_triangle();
    bad.colors[1] = TangentVector{bad.colors[1].v * 1.1};
    CHECK(thrown_kind([&] { coloring_to_rep(bad, p); }) ==
          ErrorKind::CorrespondenceViolation);
  }
}

TEST_CASE("rep_to_coloring") {
  const WirtingerPresentation p = wirtinger(builtin("trefoil"));

  SUBCASE("inverts coloring_to_rep") {
    const SphericalColoring tri = trefoil_triangle();
    const SphericalColoring back = rep_to_coloring(coloring_to_rep(tri, p), kPi / 2);
    for (std::size_t k = 0; k < tri.colors.size(); ++k) {
      CHECK(distance(back.colors[k], tri.colors[k]) < 1e-10);
    }
    CHECK(back.residual < 1e-10);
  }

  SUBCASE("abelian rep maps to the constant coloring") {
    const double r = 1.1;
    SU2Representation rho;
    rho.presentation = p;
    rho.images.assign(3, exp_tangent(TangentVector::diag(r)));
    const SphericalColoring c = rep_to_coloring(rho, r);
    for (const auto& col : c.colors) {
      CHECK(distance(col, TangentVector::diag(r)) < 1e-12);
    }
  }

  SUBCASE("wrong trace lands outside the fixed-trace class") {
    SU2Representation rho;
    rho.presentation = p;
    rho.images.assign(3, exp_tangent(TangentVector::diag(kPi / 2)));
    rho.images[1] = UnitQuaternion{0.15, std::sqrt(1.0 - 0.15 * 0.15), 0, 0};
    CHECK(thrown_kind([&] { rep_to_coloring(rho, kPi / 2); }) ==
          ErrorKind::NotInRepSet);
  }

  SUBCASE("identity image is a degenerate logarithm") {
    SU2Representation rho;
    rho.presentation = wirtinger(builtin("unknot"));
    rho.images = {UnitQuaternion::identity()};
    CHECK(thrown_kind([&] { rep_to_coloring(rho, 1.0, 4.0); }) ==
          ErrorKind::DegenerateLog);
  }
}

TEST_CASE("is_abelian") {
  const WirtingerPresentation p = wirtinger(builtin("trefoil"));
  const double r = 0.8;

  SU2Representation rho;
  rho.presentation = p;

  SUBCASE("constant images commute") {
    rho.images.assign(3, exp_tangent(TangentVector::diag(r)));
    CHECK(is_abelian(rho));
  }
  SUBCASE("exp(D(r)) and exp(-D(r)) commute") {
    rho.images = {exp_tangent(TangentVector::diag(r)),
                  exp_tangent(TangentVector{-r, 0, 0}),
                  exp_tangent(TangentVector::diag(r))};
    CHECK(is_abelian(rho));
  }
  SUBCASE("the triangle does not") {
    CHECK_FALSE(is_abelian(coloring_to_rep(trefoil_triangle(), p)));
  }
}

TEST_CASE("equivalence audit") {
  const WirtingerPresentation p = wirtinger(builtin("trefoil"));

  SUBCASE("constant coloring") {
    const AuditReport rep = equivalence_audit(constant_coloring(3, 1.0), p);
    CHECK(rep.all_pass());
  }

  SUBCASE("equatorial triangle") {
    const AuditReport rep = equivalence_audit(trefoil_triangle(), p);
    CHECK(rep.all_pass());
    for (const auto& clause : rep.clauses) {
      CAPTURE(clause.name);
      CHECK(clause.pass);
    }
  }

  SUBCASE("rotated colorings stay conjugate") {
    Rng rng(601);
    const SphericalColoring tri = trefoil_triangle();
    for (int trial = 0; trial < 20; ++trial) {
      SphericalColoring rotated = tri;
      const UnitQuaternion g = random_unit_quaternion(rng);
      for (auto& c : rotated.colors) c = adjoint(c, g);
      const AuditReport rep = equivalence_audit(rotated, p, 700 + trial);
      CHECK(rep.all_pass());
    }
  }
}

TEST_CASE("round trips across radii and knots") {
  SolverConfig cfg;
  cfg.starts = 24;
  cfg.seed = 11;

  for (const char* name : {"trefoil", "figure8"}) {
    const KnotDiagram d = builtin(name);
    const WirtingerPresentation p = wirtinger(d);
    for (const double r : {kPi / 3, kPi / 2}) {
      CAPTURE(name);
      CAPTURE(r);
      const OrbitReduction red = solve_spherical(d, r, cfg);
      for (const auto& c : red.representatives) {
        const SU2Representation rho = coloring_to_rep(c, p);
        CHECK(rho.max_relation_error < 1e-9);

        const double want = 2.0 * std::cos(r);
        for (const auto& g : rho.images) {
          CHECK(std::abs(g.trace() - want) < 1e-10);
        }

        const SphericalColoring back = rep_to_coloring(rho, r);
        for (std::size_t k = 0; k < c.colors.size(); ++k) {
          CHECK(distance(back.colors[k], c.colors[k]) < 1e-10);
        }

        // triviality <=> abelian, on everything the solver returns
        CHECK((classify(c) == ColoringClass::Trivial) == is_abelian(rho));
      }
    }
  }
}
