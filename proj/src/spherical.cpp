#include "sphandle/spherical.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "sphandle/error.hpp"
#include "sphandle/kernels.hpp"
#include "sphandle/rng.hpp"

namespace sphandle {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unit_interval(double v, const char* what) {
  if (!(v > 0.0 && v < kPi)) {
    std::ostringstream msg;
    msg << what << " = " << v << " outside (0, pi)";
    fail(ErrorKind::OutOfDomain, msg.str());
  }
}

// Structure-of-arrays buffer for the batch kernels.
struct Soa3 {
  std::vector<double> x, y, z;

  explicit Soa3(std::size_t n) : x(n), y(n), z(n) {}

  std::size_t size() const { return x.size(); }

  void set(std::size_t i, const Vec3& v) {
    x[i] = v.x;
    y[i] = v.y;
    z[i] = v.z;
  }
  Vec3 get(std::size_t i) const { return {x[i], y[i], z[i]}; }
};

Soa3 random_batch(Rng& rng, std::size_t n, double radius) {
  Soa3 out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, random_unit_vec3(rng) * radius);
  return out;
}

Soa3 scaled(const Soa3& a, double s) {
  Soa3 out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.x[i] = a.x[i] * s;
    out.y[i] = a.y[i] * s;
    out.z[i] = a.z[i] * s;
  }
  return out;
}

double max_distance(const Soa3& a, const Soa3& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double dx = a.x[i] - b.x[i], dy = a.y[i] - b.y[i], dz = a.z[i] - b.z[i];
    worst = std::max(worst, std::sqrt(dx * dx + dy * dy + dz * dz));
  }
  return worst;
}

// Batch form of one presentation's quandle operation and its inverse.
class BatchOp {
 public:
  explicit BatchOp(const SphericalQuandleTag& tag) : tag_(tag) {
    switch (tag.presentation) {
      case Presentation::AzcanFenn:
        break;
      case Presentation::AugmentedR:
        angle_ = -2.0 * tag.param;
        axis_scale_ = 1.0 / tag.param;
        break;
      case Presentation::ClarkSaito:
        angle_ = tag.param;
        break;
    }
  }

  double radius() const {
    return tag_.presentation == Presentation::AugmentedR ? tag_.param : 1.0;
  }

  void apply(const Soa3& a, const Soa3& b, Soa3& out, bool inverse) const {
    const auto& k = kernels::active();
    const std::size_t n = a.size();
    switch (tag_.presentation) {
      case Presentation::AzcanFenn:
        // involutory: the inverse is the operation itself
        k.azcan_fenn(n, a.x.data(), a.y.data(), a.z.data(), b.x.data(),
                     b.y.data(), b.z.data(), out.x.data(), out.y.data(),
                     out.z.data());
        return;
      case Presentation::AugmentedR: {
        const Soa3 axes = scaled(b, axis_scale_);
        const double ang = inverse ? -angle_ : angle_;
        k.rotate_axis_angle(n, a.x.data(), a.y.data(), a.z.data(), axes.x.data(),
                            axes.y.data(), axes.z.data(), std::cos(ang),
                            std::sin(ang), out.x.data(), out.y.data(),
                            out.z.data());
        return;
      }
      case Presentation::ClarkSaito: {
        const double ang = inverse ? -angle_ : angle_;
        k.rotate_axis_angle(n, a.x.data(), a.y.data(), a.z.data(), b.x.data(),
                            b.y.data(), b.z.data(), std::cos(ang), std::sin(ang),
                            out.x.data(), out.y.data(), out.z.data());
        return;
      }
    }
  }

 private:
  SphericalQuandleTag tag_;
  double angle_ = 0.0;
  double axis_scale_ = 1.0;
};

}  // namespace

std::string to_string(Presentation p) {
  switch (p) {
    case Presentation::AzcanFenn:
      return "azcan_fenn";
    case Presentation::AugmentedR:
      return "augmented";
    case Presentation::ClarkSaito:
      return "clark_saito";
  }
  return "?";
}

SphericalQuandleTag SphericalQuandleTag::augmented(double r) {
  require_unit_interval(r, "augmented quandle radius r");
  return {Presentation::AugmentedR, r};
}

SphericalQuandleTag SphericalQuandleTag::clark_saito(double psi) {
  require_unit_interval(psi, "clark-saito angle psi");
  return {Presentation::ClarkSaito, psi};
}

SpherePoint op_azcan_fenn(const SpherePoint& x, const SpherePoint& y) {
  const Vec3 out = 2.0 * dot(x.u, y.u) * y.u - x.u;
  return SpherePoint{normalized(out)};
}

TangentVector op_augmented(const TangentVector& X, const TangentVector& Y) {
  const double rx = X.radius(), ry = Y.radius();
  if (std::abs(rx - ry) > 1e-9) {
    std::ostringstream msg;
    msg << "op_augmented: radii differ, |X| = " << rx << ", |Y| = " << ry;
    fail(ErrorKind::MixedRadius, msg.str());
  }
  return adjoint(X, exp_tangent(Y));
}

TangentVector op_augmented_inverse(const TangentVector& X, const TangentVector& Y) {
  const double rx = X.radius(), ry = Y.radius();
  if (std::abs(rx - ry) > 1e-9) {
    fail(ErrorKind::MixedRadius, "op_augmented_inverse: radii differ");
  }
  return adjoint(X, exp_tangent(TangentVector{-Y.v}));
}

SpherePoint op_clark_saito(const SpherePoint& u, const SpherePoint& v, double psi) {
  require_unit_interval(psi, "psi");
  return SpherePoint{normalized(rotate_about(u.u, v.u, psi))};
}

Vec3 rotate_about(const Vec3& u, const Vec3& k, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return u * c + cross(k, u) * s + k * (dot(k, u) * (1.0 - c));
}

TangentVector h_map(const SpherePoint& x) {
  return TangentVector{x.u * (kPi / 2.0)};
}

SpherePoint h_inverse(const TangentVector& X) {
  if (std::abs(X.radius() - kPi / 2.0) > 1e-9) {
    fail(ErrorKind::OutOfDomain, "h_inverse: input not on S^2(pi/2)");
  }
  return SpherePoint{normalized(X.v)};
}

double reduce_angle(double a) {
  const double two_pi = 2.0 * kPi;
  double out = std::remainder(a, two_pi);  // (-pi, pi] up to the -pi edge
  if (out <= -kPi) out += two_pi;
  return out;
}

double clark_saito_psi(double r) { return reduce_angle(2.0 * kPi - 2.0 * r); }

AxiomResiduals sampled_axiom_residuals(const SphericalQuandleTag& tag, int samples,
                                       std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(samples);
  const BatchOp op(tag);
  Rng rng(seed);
  const Soa3 a = random_batch(rng, n, op.radius());
  const Soa3 b = random_batch(rng, n, op.radius());
  const Soa3 c = random_batch(rng, n, op.radius());

  AxiomResiduals res;
  Soa3 t1(n), t2(n), t3(n), t4(n);

  // Q1: a |> a = a
  op.apply(a, a, t1, false);
  res.q1 = max_distance(t1, a);

  // Q2: S_b invertible, via the closed-form inverse
  op.apply(a, b, t1, false);
  op.apply(t1, b, t2, true);
  res.q2 = max_distance(t2, a);

  // Q3: (a |> b) |> c = (a |> c) |> (b |> c)
  op.apply(a, b, t1, false);
  op.apply(t1, c, t2, false);
  op.apply(a, c, t1, false);
  op.apply(b, c, t3, false);
  op.apply(t1, t3, t4, false);
  res.q3 = max_distance(t2, t4);

  return res;
}

double h_map_hom_residual(int samples, std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(samples);
  Rng rng(seed);
  const Soa3 x = random_batch(rng, n, 1.0);
  const Soa3 y = random_batch(rng, n, 1.0);
  const auto& k = kernels::active();

  // h(x |> y): the unit-sphere operation scaled by pi/2
  Soa3 lhs(n);
  k.azcan_fenn(n, x.x.data(), x.y.data(), x.z.data(), y.x.data(), y.y.data(),
               y.z.data(), lhs.x.data(), lhs.y.data(), lhs.z.data());
  lhs = scaled(lhs, kPi / 2.0);

  // h(x) |> h(y): rotate (pi/2) x about y by -2 * (pi/2)
  const Soa3 hx = scaled(x, kPi / 2.0);
  Soa3 rhs(n);
  const double ang = -kPi;
  k.rotate_axis_angle(n, hx.x.data(), hx.y.data(), hx.z.data(), y.x.data(),
                      y.y.data(), y.z.data(), std::cos(ang), std::sin(ang),
                      rhs.x.data(), rhs.y.data(), rhs.z.data());

  return max_distance(lhs, rhs);
}

double h_map_exp_identity_residual(int samples, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const SpherePoint y = random_sphere_point(rng);
    const TangentVector hy = h_map(y);
    const UnitQuaternion g = exp_tangent(hy);
    const Vec3 expected = hy.v * (2.0 / kPi);
    const double d = std::sqrt(g.w * g.w + (g.vector_part() - expected).squared_norm());
    worst = std::max(worst, d);
  }
  return worst;
}

double clark_saito_consistency_residual(double r, int samples, std::uint64_t seed,
                                        bool flip_orientation) {
  require_unit_interval(r, "r");
  const std::size_t n = static_cast<std::size_t>(samples);
  double psi = clark_saito_psi(r);
  if (flip_orientation) psi = -psi;

  Rng rng(seed);
  const Soa3 u = random_batch(rng, n, 1.0);
  const Soa3 v = random_batch(rng, n, 1.0);
  const auto& k = kernels::active();

  // r * (u *_psi v)
  Soa3 cs(n);
  k.rotate_axis_angle(n, u.x.data(), u.y.data(), u.z.data(), v.x.data(),
                      v.y.data(), v.z.data(), std::cos(psi), std::sin(psi),
                      cs.x.data(), cs.y.data(), cs.z.data());
  cs = scaled(cs, r);

  // (r u) |> (r v) on S^2(r)
  const Soa3 ru = scaled(u, r);
  Soa3 aug(n);
  const double ang = -2.0 * r;
  k.rotate_axis_angle(n, ru.x.data(), ru.y.data(), ru.z.data(), v.x.data(),
                      v.y.data(), v.z.data(), std::cos(ang), std::sin(ang),
                      aug.x.data(), aug.y.data(), aug.z.data());

  return max_distance(cs, aug);
}

InnerRotationReport inner_rotation_report(double r, int samples, std::uint64_t seed) {
  require_unit_interval(r, "r");
  InnerRotationReport rep;
  Rng rng(seed);

  const double canonical_angle = std::min(2.0 * r, 2.0 * kPi - 2.0 * r);
  std::array<Vec3, 3> prev_cols{};
  bool have_prev = false;

  for (int i = 0; i < samples; ++i) {
    const TangentVector y = random_tangent(rng, r);
    const Vec3 yhat = normalized(y.v);

    std::array<Vec3, 3> cols;
    const Vec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int j = 0; j < 3; ++j) {
      cols[j] = op_augmented(TangentVector{e[j] * r}, y).v / r;
    }

    // M^T M = I
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const double want = (a == b) ? 1.0 : 0.0;
        rep.max_orthogonality_defect = std::max(
            rep.max_orthogonality_defect, std::abs(dot(cols[a], cols[b]) - want));
      }
    }

    const double det = dot(cols[0], cross(cols[1], cols[2]));
    rep.max_det_defect = std::max(rep.max_det_defect, std::abs(det - 1.0));

    // axis fixed
    const Vec3 myhat = cols[0] * yhat.x + cols[1] * yhat.y + cols[2] * yhat.z;
    rep.max_axis_defect = std::max(rep.max_axis_defect, distance(myhat, yhat));

    // rotation angle via atan2 of the antisymmetric part: stays conditioned
    // at angle pi, where acos of the trace loses half the digits
    const double tr = cols[0].x + cols[1].y + cols[2].z;
    const Vec3 antisym{(cols[1].z - cols[2].y) / 2.0, (cols[2].x - cols[0].z) / 2.0,
                       (cols[0].y - cols[1].x) / 2.0};
    const double angle = std::atan2(antisym.norm(), (tr - 1.0) / 2.0);
    rep.max_angle_defect =
        std::max(rep.max_angle_defect, std::abs(angle - canonical_angle));

    // sense: conjugation by exp(Y) turns by -2r about y^
    Vec3 w = cross(yhat, std::abs(yhat.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0});
    w = normalized(w);
    const Vec3 mw = cols[0] * w.x + cols[1] * w.y + cols[2] * w.z;
    const double sense = dot(yhat, cross(w, mw));
    rep.max_sense_defect =
        std::max(rep.max_sense_defect, std::abs(sense + std::sin(2.0 * r)));

    if (have_prev) {
      // product of two inner maps stays orthogonal
      std::array<Vec3, 3> prod;
      for (int j = 0; j < 3; ++j) {
        const Vec3 v = prev_cols[j];
        prod[j] = cols[0] * v.x + cols[1] * v.y + cols[2] * v.z;
      }
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const double want = (a == b) ? 1.0 : 0.0;
          rep.max_composition_defect = std::max(
              rep.max_composition_defect, std::abs(dot(prod[a], prod[b]) - want));
        }
      }
    }
    prev_cols = cols;
    have_prev = true;
  }

  rep.ok = rep.max_orthogonality_defect < 1e-10 && rep.max_det_defect < 1e-10 &&
           rep.max_axis_defect < 1e-10 && rep.max_angle_defect < 1e-9 &&
           rep.max_sense_defect < 1e-9 && rep.max_composition_defect < 1e-10;
  return rep;
}

bool inner_rotation_check(double r, int samples, std::uint64_t seed) {
  return inner_rotation_report(r, samples, seed).ok;
}

}  // namespace sphandle
