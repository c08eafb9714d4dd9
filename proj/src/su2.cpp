#include "sphandle/su2.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sphandle/error.hpp"
#include "sphandle/rng.hpp"

namespace sphandle {

UnitQuaternion qmul(const UnitQuaternion& a, const UnitQuaternion& b) {
  UnitQuaternion q{
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
  const double inv = 1.0 / q.norm();
  return {q.w * inv, q.x * inv, q.y * inv, q.z * inv};
}

UnitQuaternion exp_tangent(const TangentVector& X) {
  const double r = X.radius();
  if (r == 0.0) return UnitQuaternion::identity();
  // sin(r)/r stays well conditioned down to tiny r via the direct quotient;
  // the r == 0 case above covers the removable singularity.
  const double s = std::sin(r) / r;
  return {std::cos(r), s * X.v.x, s * X.v.y, s * X.v.z};
}

TangentVector log_unit(const UnitQuaternion& g, double r, double trace_tol) {
  if (!(r > 0.0 && r < std::numbers::pi)) {
    std::ostringstream msg;
    msg << "log_unit: r = " << r << " outside (0, pi)";
    fail(ErrorKind::OutOfDomain, msg.str());
  }
  const double want = 2.0 * std::cos(r);
  if (std::abs(g.trace() - want) > trace_tol) {
    std::ostringstream msg;
    msg << "log_unit: trace " << g.trace() << " != 2 cos r = " << want
        << " (tol " << trace_tol << ")";
    fail(ErrorKind::TraceMismatch, msg.str());
  }
  const Vec3 vec = g.vector_part();
  const double n = vec.norm();
  if (n < 1e-12) {
    fail(ErrorKind::DegenerateLog,
         "log_unit: vector part vanishes (g = +-identity)");
  }
  return TangentVector{vec * (r / n)};
}

TangentVector adjoint(const TangentVector& X, const UnitQuaternion& g) {
  const UnitQuaternion p{0.0, X.v.x, X.v.y, X.v.z};
  // g^-1 p g without the unit renormalization qmul applies: p is not unit.
  const UnitQuaternion gi = g.inverse();
  auto raw = [](const UnitQuaternion& a, const UnitQuaternion& b) {
    return UnitQuaternion{
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
  };
  const UnitQuaternion out = raw(raw(gi, p), g);
  Vec3 v{out.x, out.y, out.z};
  const double r = X.radius();
  if (r > 0.0) v = v * (r / v.norm());
  return TangentVector{v};
}

std::array<Vec3, 3> adjoint_matrix(const UnitQuaternion& g) {
  std::array<Vec3, 3> cols;
  const Vec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i) cols[i] = adjoint(TangentVector{e[i]}, g).v;
  return cols;
}

UnitQuaternion rotation_lift(const std::array<Vec3, 3>& columns) {
  // adjoint_matrix(g) is the transpose of the usual sandwich matrix of g, so
  // extract the quaternion from the transpose (Shepperd's branching).
  const auto m = [&columns](int i, int j) {
    const Vec3& col = columns[j];
    return i == 0 ? col.x : (i == 1 ? col.y : col.z);
  };
  const auto s = [&m](int i, int j) { return m(j, i); };

  const double t = s(0, 0) + s(1, 1) + s(2, 2);
  double w, x, y, z;
  if (t > 0.0) {
    const double q = std::sqrt(1.0 + t) * 2.0;
    w = 0.25 * q;
    x = (s(2, 1) - s(1, 2)) / q;
    y = (s(0, 2) - s(2, 0)) / q;
    z = (s(1, 0) - s(0, 1)) / q;
  } else if (s(0, 0) > s(1, 1) && s(0, 0) > s(2, 2)) {
    const double q = std::sqrt(1.0 + s(0, 0) - s(1, 1) - s(2, 2)) * 2.0;
    w = (s(2, 1) - s(1, 2)) / q;
    x = 0.25 * q;
    y = (s(0, 1) + s(1, 0)) / q;
    z = (s(0, 2) + s(2, 0)) / q;
  } else if (s(1, 1) > s(2, 2)) {
    const double q = std::sqrt(1.0 + s(1, 1) - s(0, 0) - s(2, 2)) * 2.0;
    w = (s(0, 2) - s(2, 0)) / q;
    x = (s(0, 1) + s(1, 0)) / q;
    y = 0.25 * q;
    z = (s(1, 2) + s(2, 1)) / q;
  } else {
    const double q = std::sqrt(1.0 + s(2, 2) - s(0, 0) - s(1, 1)) * 2.0;
    w = (s(1, 0) - s(0, 1)) / q;
    x = (s(0, 2) + s(2, 0)) / q;
    y = (s(1, 2) + s(2, 1)) / q;
    z = 0.25 * q;
  }
  const double inv = 1.0 / std::sqrt(w * w + x * x + y * y + z * z);
  return {w * inv, x * inv, y * inv, z * inv};
}

bool isotropy_is_diagonal(double r, int samples, unsigned long long seed) {
  const double pi = std::numbers::pi;
  if (std::abs(std::sin(r)) < 1e-12) {
    fail(ErrorKind::OutOfDomain, "isotropy_is_diagonal: r in pi Z");
  }
  const TangentVector d = TangentVector::diag(r);
  const UnitQuaternion ed = exp_tangent(d);
  Rng rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 2.0 * pi);

  for (int k = 0; k < samples; ++k) {
    // Diagonal family: cos t + sin t * i.
    const double t = unif(rng);
    const UnitQuaternion diag{std::cos(t), std::sin(t), 0.0, 0.0};
    if (distance(adjoint(d, diag), d) > 1e-12) return false;
    if (distance(qmul(qmul(diag.inverse(), ed), diag), ed) > 1e-12) return false;

    // Non-diagonal elements must move both.  Resample until the j/k part and
    // the rotation angle are bounded away from the degenerate cases, which
    // gives the displacement a concrete floor.
    UnitQuaternion g;
    for (;;) {
      g = random_unit_quaternion(rng);
      const double jk = std::sqrt(g.y * g.y + g.z * g.z);
      const double vec = g.vector_part().norm();
      if (jk > 0.1 && vec > 0.1 && vec < 0.999) break;
    }
    if (distance(adjoint(d, g), d) < 1e-6) return false;
    if (distance(qmul(qmul(g.inverse(), ed), g), ed) < 1e-6) return false;
  }
  return true;
}

}  // namespace sphandle
