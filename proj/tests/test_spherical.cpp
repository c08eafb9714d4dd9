#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sphandle/rng.hpp"
#include "sphandle/spherical.hpp"
#include "test_util.hpp"

using namespace sphandle;
using sphandle_test::thrown_kind;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("inner-product sphere operation") {
  const SpherePoint x{1, 0, 0}, y{0, 1, 0};
  CHECK(distance(op_azcan_fenn(x, y).u, Vec3{-1, 0, 0}) < 1e-15);

  const double s = 1.0 / std::sqrt(2.0);
  CHECK(distance(op_azcan_fenn(x, SpherePoint{s, s, 0}).u, Vec3{0, 1, 0}) < 1e-14);

  Rng rng(31);
  double worst_q1 = 0.0, worst_inv = 0.0, worst_antipodal = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const SpherePoint a = random_sphere_point(rng);
    const SpherePoint b = random_sphere_point(rng);
    worst_q1 = std::max(worst_q1, distance(op_azcan_fenn(a, a).u, a.u));
    // involutory
    worst_inv = std::max(worst_inv,
                         distance(op_azcan_fenn(op_azcan_fenn(a, b), b).u, a.u));
    // {p, -p} is a trivial subquandle, exactly
    worst_antipodal =
        std::max(worst_antipodal,
                 distance(op_azcan_fenn(a, SpherePoint{-a.u}).u, a.u));
  }
  CHECK(worst_q1 < 1e-14);
  CHECK(worst_inv < 1e-12);
  CHECK(worst_antipodal < 1e-14);
}

TEST_CASE("augmented operation on S^2(r)") {
  Rng rng(37);

  SUBCASE("idempotent") {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const TangentVector a = random_tangent(rng, 0.8);
      worst = std::max(worst, distance(op_augmented(a, a), a));
    }
    CHECK(worst < 1e-13);
  }

  SUBCASE("involutory at r = pi/2") {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const TangentVector a = random_tangent(rng, kPi / 2);
      const TangentVector b = random_tangent(rng, kPi / 2);
      worst = std::max(worst, distance(op_augmented(op_augmented(a, b), b), a));
    }
    CHECK(worst < 1e-12);
  }

  SUBCASE("conjugation by the j-unit flips the first axis") {
    const TangentVector got =
        op_augmented(TangentVector::diag(kPi / 2), TangentVector{0, kPi / 2, 0});
    CHECK(distance(got, TangentVector{-kPi / 2, 0, 0}) < 1e-14);
  }

  SUBCASE("inverse really inverts") {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const TangentVector a = random_tangent(rng, 1.9);
      const TangentVector b = random_tangent(rng, 1.9);
      worst = std::max(
          worst, distance(op_augmented_inverse(op_augmented(a, b), b), a));
    }
    CHECK(worst < 1e-12);
  }

  SUBCASE("mixed radii rejected") {
    CHECK(thrown_kind([] {
            op_augmented(TangentVector::diag(1.0), TangentVector::diag(1.1));
          }) == ErrorKind::MixedRadius);
  }
}

TEST_CASE("clark-saito operation") {
  Rng rng(41);
  const SpherePoint u = random_sphere_point(rng);
  CHECK(distance(op_clark_saito(u, u, 1.3).u, u.u) < 1e-14);

  // near the psi -> pi limit a half-turn about z sends e_x to -e_x
  const SpherePoint got =
      op_clark_saito(SpherePoint{1, 0, 0}, SpherePoint{0, 0, 1}, kPi - 1e-9);
  CHECK(distance(got.u, Vec3{-1, 0, 0}) < 1e-8);

  CHECK(thrown_kind([&] { op_clark_saito(u, u, 0.0); }) == ErrorKind::OutOfDomain);
  CHECK(thrown_kind([&] { op_clark_saito(u, u, kPi); }) == ErrorKind::OutOfDomain);
  CHECK(thrown_kind([&] { op_clark_saito(u, u, -0.5); }) == ErrorKind::OutOfDomain);

  SUBCASE("matches the augmented quandle after rescaling") {
    for (const double r : {0.4, 1.0, kPi / 2, 2.0, 2.9}) {
      CAPTURE(r);
      CHECK(clark_saito_consistency_residual(r, 1000, 43) < 1e-10);
    }
  }

  SUBCASE("flipped orientation breaks the consistency") {
    CHECK(clark_saito_consistency_residual(1.0, 1000, 47, true) > 1e-3);
  }
}

TEST_CASE("sampled quandle axioms for all three presentations") {
  const auto check_tag = [](const SphericalQuandleTag& tag) {
    const AxiomResiduals res = sampled_axiom_residuals(tag, 1000, 53);
    CAPTURE(to_string(tag.presentation));
    CAPTURE(tag.param);
    CHECK(res.q1 < 1e-10);
    CHECK(res.q2 < 1e-10);
    CHECK(res.q3 < 1e-10);
  };

  check_tag(SphericalQuandleTag::azcan_fenn());
  for (int i = 1; i <= 5; ++i) {
    check_tag(SphericalQuandleTag::augmented(kPi * i / 6.0));
    check_tag(SphericalQuandleTag::clark_saito(kPi * i / 6.0));
  }

  CHECK(thrown_kind([] { SphericalQuandleTag::augmented(0.0); }) ==
        ErrorKind::OutOfDomain);
  CHECK(thrown_kind([] { SphericalQuandleTag::clark_saito(kPi); }) ==
        ErrorKind::OutOfDomain);
}

TEST_CASE("the map h is an isomorphism onto S^2(pi/2)") {
  CHECK(distance(h_map(SpherePoint{1, 0, 0}), TangentVector::diag(kPi / 2)) <
        1e-15);

  CHECK(h_map_hom_residual(10000, 59) < 1e-12);
  CHECK(h_map_exp_identity_residual(10000, 61) < 1e-12);

  Rng rng(67);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const SpherePoint x = random_sphere_point(rng);
    worst = std::max(worst, distance(h_inverse(h_map(x)).u, x.u));
  }
  CHECK(worst < 1e-14);

  CHECK(thrown_kind([] { h_inverse(TangentVector::diag(1.0)); }) ==
        ErrorKind::OutOfDomain);
}

TEST_CASE("exp restricted to S^2(r) is faithful") {
  Rng rng(71);
  std::uniform_real_distribution<double> radius(0.05, kPi - 0.05);
  for (int k = 0; k < 10000; ++k) {
    const double r = radius(rng);
    const TangentVector a = random_tangent(rng, r);
    const TangentVector b = random_tangent(rng, r);
    const double separation = distance(a, b);
    if (separation < 1e-9) continue;
    CHECK(distance(exp_tangent(a), exp_tangent(b)) > 1e-9 * separation);
  }
}

TEST_CASE("inner maps are rotations by 2r") {
  CHECK(inner_rotation_check(kPi / 2, 100));
  CHECK(inner_rotation_check(1.2, 100));

  for (const double r : {0.3, 1.0, 2.5}) {
    const InnerRotationReport rep = inner_rotation_report(r, 50, 73);
    CAPTURE(r);
    CHECK(rep.ok);
    CHECK(rep.max_orthogonality_defect < 1e-10);
    CHECK(rep.max_det_defect < 1e-10);
    CHECK(rep.max_angle_defect < 1e-9);
    // never the identity rotation for r in (0, pi)
    CHECK(std::min(2.0 * r, 2.0 * kPi - 2.0 * r) > 1e-3);
  }
}

TEST_CASE("angle reduction and the psi(r) correspondence") {
  CHECK(reduce_angle(0.0) == doctest::Approx(0.0));
  CHECK(reduce_angle(3 * kPi) == doctest::Approx(kPi));
  CHECK(reduce_angle(-kPi) == doctest::Approx(kPi));

  // for r past pi/2 the parameter lands in Clark-Saito's (0, pi) range
  CHECK(clark_saito_psi(2.0) == doctest::Approx(2 * kPi - 4.0));
  // below pi/2 the reduced angle is the negative rotation by 2r
  CHECK(clark_saito_psi(1.0) == doctest::Approx(-2.0));
}
