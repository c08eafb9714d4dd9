#pragma once

#include <array>

#include "sphandle/vec3.hpp"

namespace sphandle {

// Element of SU(2) stored as a unit quaternion w + xi + yj + zk.
// The matrix identification is
//   [[ w+ix,  y+iz ],
//    [ -y+iz, w-ix ]]
// so the Hamilton product equals the matrix product and trace = 2w.
struct UnitQuaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr UnitQuaternion() = default;
  constexpr UnitQuaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr UnitQuaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

  constexpr UnitQuaternion conjugate() const { return {w, -x, -y, -z}; }
  // For unit quaternions the inverse is the conjugate.
  constexpr UnitQuaternion inverse() const { return conjugate(); }

  constexpr double trace() const { return 2.0 * w; }
  constexpr Vec3 vector_part() const { return {x, y, z}; }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  constexpr UnitQuaternion operator-() const { return {-w, -x, -y, -z}; }

  // 2x2 complex matrix as { {a_re, a_im}, {b_re, b_im}, {c_re, c_im}, {d_re, d_im} }
  // in row-major order.
  std::array<std::array<double, 2>, 4> matrix() const {
    return {{{w, x}, {y, z}, {-y, z}, {w, -x}}};
  }
};

inline double distance(const UnitQuaternion& a, const UnitQuaternion& b) {
  const double dw = a.w - b.w, dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

// Distance to the nearer of q and -q. SO(3) statements care about this one;
// SU(2) equality uses the plain distance above.
inline double distance_up_to_sign(const UnitQuaternion& a, const UnitQuaternion& b) {
  return std::min(distance(a, b), distance(a, -b));
}

// Point of the radius-r sphere S^2(r) in su(2), stored as the 3-vector v with
// matrix form [[i v1, v2 + i v3], [-v2 + i v3, -i v1]].  D(r) is v = (r,0,0).
struct TangentVector {
  Vec3 v;

  constexpr TangentVector() = default;
  constexpr explicit TangentVector(const Vec3& v_) : v(v_) {}
  constexpr TangentVector(double v1, double v2, double v3) : v{v1, v2, v3} {}

  double radius() const { return v.norm(); }

  static constexpr TangentVector diag(double r) { return {r, 0.0, 0.0}; }
};

inline double distance(const TangentVector& a, const TangentVector& b) {
  return distance(a.v, b.v);
}

// Point of the unit sphere S^2 in R^3 (the inner-product presentation).
struct SpherePoint {
  Vec3 u;

  constexpr SpherePoint() = default;
  constexpr explicit SpherePoint(const Vec3& u_) : u(u_) {}
  constexpr SpherePoint(double x, double y, double z) : u{x, y, z} {}
};

// Hamilton product, renormalized to keep |q| = 1 against drift.
UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b);

// exp: su(2) -> SU(2).  exp(X) = cos r + sin(r) * v/r for r = |X|; identity at r = 0.
// The trace of the result is 2 cos r.
UnitQuaternion exp_tangent(const TangentVector& X);

// Inverse of exp on S^2(r) for r in (0,pi).  Requires trace(g) = 2 cos r within
// trace_tol; rejects g = +-identity whose vector part gives no direction.
TangentVector log_unit(const UnitQuaternion& g, double r, double trace_tol = 1e-9);

// Adjoint right action X . g = g^-1 X g.  An SO(3) rotation of v; the result is
// rescaled to |X| exactly.
TangentVector adjoint(const TangentVector& X, const UnitQuaternion& g);

// 3x3 rotation matrix of the map v -> g^-1 v g, column-major columns[i] = image of e_i.
std::array<Vec3, 3> adjoint_matrix(const UnitQuaternion& g);

// One of the two preimages g under the 2-to-1 covering: adjoint_matrix of the
// result equals the given rotation matrix; the other preimage is -g.
UnitQuaternion rotation_lift(const std::array<Vec3, 3>& columns);

// Samples the diagonal one-parameter family and random non-diagonal elements,
// checking that exactly the diagonal family fixes D(r) under the adjoint action
// and exp D(r) under conjugation.  r must avoid pi Z.
bool isotropy_is_diagonal(double r, int samples = 32, unsigned long long seed = 2026);

}  // namespace sphandle
