#pragma once

#include <cstdint>
#include <string>

#include "sphandle/su2.hpp"

namespace sphandle {

enum class Presentation { AzcanFenn, AugmentedR, ClarkSaito };

std::string to_string(Presentation p);

// Which spherical quandle is meant: the unit-sphere inner-product quandle,
// the radius-r subquandle of su(2), or the rotation-by-psi quandle on pure
// unit quaternions.
struct SphericalQuandleTag {
  Presentation presentation = Presentation::AzcanFenn;
  double param = 0.0;  // r for AugmentedR, psi for ClarkSaito, ignored otherwise

  static SphericalQuandleTag azcan_fenn() { return {Presentation::AzcanFenn, 0.0}; }
  static SphericalQuandleTag augmented(double r);
  static SphericalQuandleTag clark_saito(double psi);
};

// x |> y = 2 <x,y> y - x, renormalized against drift.
SpherePoint op_azcan_fenn(const SpherePoint& x, const SpherePoint& y);

// X |> Y = exp(Y)^-1 X exp(Y) on S^2(r); operands must share the radius
// within 1e-9.
TangentVector op_augmented(const TangentVector& X, const TangentVector& Y);

// S_Y^-1, the rotation by +2r about Y.  Exact closed form used for negative
// crossings.
TangentVector op_augmented_inverse(const TangentVector& X, const TangentVector& Y);

// u * v = u rotated about the axis v through psi (right-hand rule), psi in (0,pi).
SpherePoint op_clark_saito(const SpherePoint& u, const SpherePoint& v, double psi);

// Rodrigues rotation of u about a unit axis; any angle.
Vec3 rotate_about(const Vec3& u, const Vec3& unit_axis, double angle);

// The isomorphism S^2_R -> S^2(pi/2): multiplication by pi/2 under the module's
// su(2) <-> R^3 identification.
TangentVector h_map(const SpherePoint& x);
SpherePoint h_inverse(const TangentVector& X);

// Angle reduced into (-pi, pi].
double reduce_angle(double a);

// The Clark-Saito parameter matching S^2(r): 2 pi - 2 r reduced into (-pi, pi].
double clark_saito_psi(double r);

// ---- sampled verification ------------------------------------------------
// These drive the batch kernels; they back both the CLI isocheck command and
// the test suites.

struct AxiomResiduals {
  double q1 = 0.0;
  double q2 = 0.0;  // |S_y^-1(S_y(x)) - x|
  double q3 = 0.0;

  double max() const { return std::max(q1, std::max(q2, q3)); }
};

AxiomResiduals sampled_axiom_residuals(const SphericalQuandleTag& tag, int samples,
                                       std::uint64_t seed);

// max |h(x |> y) - h(x) |> h(y)| over random pairs.
double h_map_hom_residual(int samples, std::uint64_t seed);

// max quaternion distance between exp h(y) and the pure quaternion (2/pi) h(y).
double h_map_exp_identity_residual(int samples, std::uint64_t seed);

// max |r * (u *_psi v) - (r u) |> (r v)| over random pairs, psi = clark_saito_psi(r).
// flip_orientation negates psi; the check is expected to fail then.
double clark_saito_consistency_residual(double r, int samples, std::uint64_t seed,
                                        bool flip_orientation = false);

struct InnerRotationReport {
  double max_orthogonality_defect = 0.0;  // |M^T M - I|, entrywise max
  double max_det_defect = 0.0;            // |det M - 1|
  double max_axis_defect = 0.0;           // |M y^ - y^|
  double max_angle_defect = 0.0;          // |angle(M) - min(2r, 2pi-2r)|
  double max_sense_defect = 0.0;          // |<y^, w x Mw> + sin 2r|
  double max_composition_defect = 0.0;    // orthogonality of products M1 M2
  bool ok = false;
};

InnerRotationReport inner_rotation_report(double r, int samples, std::uint64_t seed);

// True when every sampled inner map is an orthogonal det +1 transformation
// (defects < 1e-10, angle within 1e-9 of 2r) and products stay orthogonal.
bool inner_rotation_check(double r, int samples, std::uint64_t seed = 2026);

}  // namespace sphandle
