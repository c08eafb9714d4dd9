#include "sphandle/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include <Eigen/Dense>

#include "sphandle/error.hpp"
#include "sphandle/rng.hpp"
#include "sphandle/spherical.hpp"

namespace sphandle {

namespace {

constexpr double kPi = std::numbers::pi;

// ---- finite enumeration ----------------------------------------------------

// Propagates determined arcs through the relation list until a fixed point;
// returns false on conflict.
bool propagate(const std::vector<CrossingRelation>& rels, const FiniteQuandle& q,
               std::vector<int>& a) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rel : rels) {
      const int vi = a[rel.in_arc], vo = a[rel.over_arc], vu = a[rel.out_arc];
      if (vo < 0) continue;  // cannot solve for the over color pointwise
      if (vi >= 0) {
        const int want = rel.sign > 0 ? q.op(vi, vo) : q.op_inverse(vi, vo);
        if (vu < 0) {
          a[rel.out_arc] = want;
          changed = true;
        } else if (vu != want) {
          return false;
        }
      } else if (vu >= 0) {
        const int want = rel.sign > 0 ? q.op_inverse(vu, vo) : q.op(vu, vo);
        a[rel.in_arc] = want;
        changed = true;
      }
    }
  }
  return true;
}

void enumerate_rec(const std::vector<CrossingRelation>& rels, const FiniteQuandle& q,
                   std::vector<int>& a, std::vector<FiniteColoring>& out) {
  const auto it = std::find(a.begin(), a.end(), -1);
  if (it == a.end()) {
    out.push_back(FiniteColoring{a});
    return;
  }
  const int arc = static_cast<int>(it - a.begin());
  for (int v = 0; v < q.n; ++v) {
    std::vector<int> branch = a;
    branch[arc] = v;
    if (propagate(rels, q, branch)) enumerate_rec(rels, q, branch, out);
  }
}

// ---- small linear algebra helpers ------------------------------------------

Eigen::Vector3d to_eigen(const Vec3& v) { return {v.x, v.y, v.z}; }
Vec3 from_eigen(const Eigen::Vector3d& v) { return {v(0), v(1), v(2)}; }

// Rotation taking unit vector a to unit vector b.
Eigen::Matrix3d rotation_between(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const Eigen::Vector3d axis_raw = a.cross(b);
  const double s = axis_raw.norm();
  const double c = a.dot(b);
  if (s < 1e-14) {
    if (c > 0.0) return Eigen::Matrix3d::Identity();
    // antipodal: half-turn about any axis orthogonal to a
    Eigen::Vector3d helper = std::abs(a.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                                   : Eigen::Vector3d::UnitY();
    const Eigen::Vector3d axis = a.cross(helper).normalized();
    return Eigen::AngleAxisd(kPi, axis).toRotationMatrix();
  }
  return Eigen::AngleAxisd(std::atan2(s, c), axis_raw / s).toRotationMatrix();
}

std::vector<Vec3> apply_rotation(const Eigen::Matrix3d& m, const std::vector<Vec3>& vs) {
  std::vector<Vec3> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(from_eigen(m * to_eigen(v)));
  return out;
}

double exact_residual(const QuandleRelationSet& rels, const std::vector<TangentVector>& colors) {
  double worst = 0.0;
  for (const auto& rel : rels.triples) {
    const TangentVector& in = colors[rel.in_arc];
    const TangentVector& over = colors[rel.over_arc];
    const TangentVector got = rel.sign > 0 ? op_augmented(in, over)
                                           : op_augmented_inverse(in, over);
    worst = std::max(worst, distance(got, colors[rel.out_arc]));
  }
  return worst;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPHANDLE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

}  // namespace

void SolverConfig::validate() const {
  if (starts < 1) fail(ErrorKind::ConfigError, "solver: starts must be >= 1");
  if (max_iters < 1) fail(ErrorKind::ConfigError, "solver: max_iters must be >= 1");
  if (!(tol_residual > 0.0) || !(tol_accept > 0.0) || !(dedupe_eps > 0.0)) {
    fail(ErrorKind::ConfigError, "solver: tolerances must be positive");
  }
}

std::vector<FiniteColoring> enumerate_finite(const KnotDiagram& d, const FiniteQuandle& q) {
  if (q.n < 1) fail(ErrorKind::InvalidSize, "enumerate_finite: empty quandle");
  std::vector<int> a(d.n_arcs, -1);
  std::vector<FiniteColoring> out;
  enumerate_rec(d.relations, q, a, out);
  std::sort(out.begin(), out.end());
  return out;
}

ColoringClass classify(const SphericalColoring& c, double eps_rel) {
  const double eps = eps_rel * std::max(c.r, 1e-300);
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    for (std::size_t j = i + 1; j < c.colors.size(); ++j) {
      const Vec3& a = c.colors[i].v;
      const Vec3& b = c.colors[j].v;
      if (std::min(distance(a, b), distance(a, -b)) > eps) {
        return ColoringClass::Nontrivial;
      }
    }
  }
  return ColoringClass::Trivial;
}

const char* to_string(ColoringClass c) {
  return c == ColoringClass::Trivial ? "TRIVIAL" : "NONTRIVIAL";
}

SphericalColoring gauge_fix(const SphericalColoring& c) {
  if (c.colors.empty()) return c;
  const double r = c.r;
  const Eigen::Vector3d north = Eigen::Vector3d::UnitZ();

  const Eigen::Vector3d first = to_eigen(c.colors[0].v).normalized();
  const Eigen::Matrix3d m = rotation_between(first, north);

  std::vector<Vec3> raw;
  raw.reserve(c.colors.size());
  for (const auto& color : c.colors) raw.push_back(color.v);
  std::vector<Vec3> rotated = apply_rotation(m, raw);

  // second rotation: about z, putting the first non-collinear color into the
  // x > 0 half of the xz-plane
  for (const auto& v : rotated) {
    const double planar = std::hypot(v.x, v.y);
    if (planar > 1e-7 * r) {
      const double ang = std::atan2(v.y, v.x);
      const Eigen::Matrix3d spin =
          Eigen::AngleAxisd(-ang, north).toRotationMatrix();
      rotated = apply_rotation(spin, rotated);
      break;
    }
  }

  SphericalColoring out;
  out.r = r;
  out.residual = c.residual;
  out.colors.reserve(rotated.size());
  for (const auto& v : rotated) {
    out.colors.emplace_back(normalized(v) * r);  // keep |v| = r exactly
  }
  return out;
}

bool same_orbit(const SphericalColoring& a, const SphericalColoring& b, double eps) {
  if (a.colors.size() != b.colors.size()) return false;
  if (std::abs(a.r - b.r) > 1e-9) {
    fail(ErrorKind::MixedRadius, "same_orbit: colorings on different spheres");
  }
  const std::size_t n = a.colors.size();

  // Orthogonal Procrustes: R = argmin sum |R a_k - b_k|^2 over SO(3)
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (std::size_t k = 0; k < n; ++k) {
    h += to_eigen(b.colors[k].v) * to_eigen(a.colors[k].v).transpose();
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d rot = svd.matrixU() * svd.matrixV().transpose();
  if (rot.determinant() < 0.0) {
    Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
    flip(2, 2) = -1.0;
    rot = svd.matrixU() * flip * svd.matrixV().transpose();
  }

  for (std::size_t k = 0; k < n; ++k) {
    const Eigen::Vector3d got = rot * to_eigen(a.colors[k].v);
    if ((got - to_eigen(b.colors[k].v)).norm() > eps) return false;
  }
  return true;
}

OrbitReduction orbit_reduce(const std::vector<SphericalColoring>& cs, double eps) {
  OrbitReduction out;
  for (const auto& raw : cs) {
    if (!out.representatives.empty() &&
        std::abs(raw.r - out.representatives[0].r) > 1e-9) {
      fail(ErrorKind::MixedRadius, "orbit_reduce: mixed radii");
    }
    const SphericalColoring fixed = gauge_fix(raw);
    bool merged = false;
    for (std::size_t i = 0; i < out.representatives.size(); ++i) {
      auto& rep = out.representatives[i];
      double worst = 0.0;
      for (std::size_t k = 0; k < rep.colors.size(); ++k) {
        worst = std::max(worst, distance(rep.colors[k], fixed.colors[k]));
      }
      if (worst < eps || same_orbit(fixed, rep, eps)) {
        out.orbit_sizes[i] += 1;
        rep.residual = std::min(rep.residual, fixed.residual);
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.representatives.push_back(fixed);
      out.orbit_sizes.push_back(1);
    }
  }
  return out;
}

std::vector<double> crossing_residual(const QuandleRelationSet& rels,
                                      const std::vector<Vec3>& colors, double r) {
  std::vector<double> f(3 * rels.triples.size());
  for (std::size_t k = 0; k < rels.triples.size(); ++k) {
    const auto& rel = rels.triples[k];
    const double theta = -2.0 * r * rel.sign;
    const double c = std::cos(theta), s = std::sin(theta);
    const Vec3& xi = colors[rel.in_arc];
    const Vec3& xo = colors[rel.over_arc];
    const Vec3& xu = colors[rel.out_arc];
    const Vec3 got = xi * c + cross(xo, xi) * (s / r) +
                     xo * (dot(xo, xi) * (1.0 - c) / (r * r));
    f[3 * k + 0] = got.x - xu.x;
    f[3 * k + 1] = got.y - xu.y;
    f[3 * k + 2] = got.z - xu.z;
  }
  return f;
}

std::vector<double> crossing_jacobian(const QuandleRelationSet& rels,
                                      const std::vector<Vec3>& colors, double r) {
  const std::size_t m = rels.triples.size();
  const std::size_t n = colors.size();
  std::vector<double> jac(3 * m * 3 * n, 0.0);
  const std::size_t stride = 3 * n;

  auto add = [&](std::size_t row, int arc, const Eigen::Matrix3d& block) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        jac[(row + a) * stride + 3 * arc + b] += block(a, b);
      }
    }
  };

  auto skew = [](const Vec3& v) {
    Eigen::Matrix3d s;
    s << 0, -v.z, v.y, v.z, 0, -v.x, -v.y, v.x, 0;
    return s;
  };

  for (std::size_t k = 0; k < m; ++k) {
    const auto& rel = rels.triples[k];
    const double theta = -2.0 * r * rel.sign;
    const double c = std::cos(theta), s = std::sin(theta);
    const double sr = s / r;
    const double omc = (1.0 - c) / (r * r);
    const Vec3& xi = colors[rel.in_arc];
    const Vec3& xo = colors[rel.over_arc];

    const Eigen::Vector3d ei = to_eigen(xi);
    const Eigen::Vector3d eo = to_eigen(xo);

    const Eigen::Matrix3d d_in = c * Eigen::Matrix3d::Identity() +
                                 sr * skew(xo) + omc * (eo * eo.transpose());
    const Eigen::Matrix3d d_over =
        -sr * skew(xi) + omc * (eo.dot(ei) * Eigen::Matrix3d::Identity() +
                                eo * ei.transpose());

    const std::size_t row = 3 * k;
    add(row, rel.in_arc, d_in);
    add(row, rel.over_arc, d_over);
    add(row, rel.out_arc, -Eigen::Matrix3d::Identity());
  }
  return jac;
}

namespace {

// One damped Gauss-Newton run from the given start; steps live in the tangent
// planes and iterates are re-projected to radius r.
std::vector<TangentVector> refine(const QuandleRelationSet& rels, double r,
                                  std::vector<Vec3> colors, const SolverConfig& cfg) {
  const std::size_t n = colors.size();
  const std::size_t m = rels.triples.size();
  double lambda = 1e-4;

  auto cost_of = [&](const std::vector<Vec3>& cs) {
    const std::vector<double> f = crossing_residual(rels, cs, r);
    double sum = 0.0;
    for (double v : f) sum += v * v;
    return sum;
  };

  double cost = cost_of(colors);

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const std::vector<double> f = crossing_residual(rels, colors, r);
    double max_err = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double e = std::hypot(f[3 * k], f[3 * k + 1], f[3 * k + 2]);
      max_err = std::max(max_err, e);
    }
    if (max_err < cfg.tol_residual) break;

    const std::vector<double> jac = crossing_jacobian(rels, colors, r);

    // tangent bases per arc
    std::vector<Eigen::Matrix<double, 3, 2>> basis(n);
    for (std::size_t a = 0; a < n; ++a) {
      const Eigen::Vector3d u = to_eigen(colors[a]).normalized();
      const Eigen::Vector3d helper = std::abs(u.x()) < 0.9
                                         ? Eigen::Vector3d::UnitX()
                                         : Eigen::Vector3d::UnitY();
      const Eigen::Vector3d t1 = u.cross(helper).normalized();
      const Eigen::Vector3d t2 = u.cross(t1);
      basis[a].col(0) = t1;
      basis[a].col(1) = t2;
    }

    // J restricted to the tangent planes
    Eigen::MatrixXd jt(3 * m, 2 * n);
    for (std::size_t row = 0; row < 3 * m; ++row) {
      for (std::size_t a = 0; a < n; ++a) {
        const Eigen::Vector3d cols{jac[row * 3 * n + 3 * a],
                                   jac[row * 3 * n + 3 * a + 1],
                                   jac[row * 3 * n + 3 * a + 2]};
        jt(row, 2 * a) = cols.dot(basis[a].col(0));
        jt(row, 2 * a + 1) = cols.dot(basis[a].col(1));
      }
    }
    const Eigen::VectorXd fv = Eigen::Map<const Eigen::VectorXd>(f.data(), 3 * m);
    const Eigen::MatrixXd jtj = jt.transpose() * jt;
    const Eigen::VectorXd g = jt.transpose() * fv;

    bool stepped = false;
    for (int attempt = 0; attempt < 8; ++attempt) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += lambda;
      const Eigen::VectorXd delta = damped.ldlt().solve(-g);

      std::vector<Vec3> trial(n);
      for (std::size_t a = 0; a < n; ++a) {
        const Eigen::Vector3d step =
            basis[a].col(0) * delta(2 * a) + basis[a].col(1) * delta(2 * a + 1);
        const Eigen::Vector3d moved = to_eigen(colors[a]) + step;
        trial[a] = from_eigen(moved.normalized() * r);
      }
      const double trial_cost = cost_of(trial);
      if (trial_cost < cost) {
        colors = std::move(trial);
        cost = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-12);
        stepped = true;
        break;
      }
      lambda *= 10.0;
      if (lambda > 1e8) break;
    }
    if (!stepped) break;
  }

  std::vector<TangentVector> out;
  out.reserve(n);
  for (const auto& v : colors) out.emplace_back(v);
  return out;
}

}  // namespace

OrbitReduction solve_spherical(const KnotDiagram& d, double r, const SolverConfig& cfg) {
  if (!(r > 0.0 && r < kPi)) {
    fail(ErrorKind::OutOfDomain, "solve_spherical: r must lie in (0, pi)");
  }
  cfg.validate();
  const QuandleRelationSet rels = quandle_relations(d);
  const std::size_t n = static_cast<std::size_t>(d.n_arcs);

  // constant coloring at the north pole: the trivial stratum, residual 0
  SphericalColoring constant;
  constant.r = r;
  constant.residual = 0.0;
  constant.colors.assign(n, TangentVector{0.0, 0.0, r});

  std::vector<SphericalColoring> found;
  found.push_back(constant);

  if (!rels.triples.empty()) {
    std::vector<std::vector<TangentVector>> results(cfg.starts);
    const int n_threads = std::min(resolve_threads(cfg.threads), cfg.starts);

    auto worker = [&](int tid) {
      for (int k = tid; k < cfg.starts; k += n_threads) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(k)));
        std::vector<Vec3> colors(n);
        for (auto& c : colors) c = random_unit_vec3(rng) * r;
        results[k] = refine(rels, r, std::move(colors), cfg);
      }
    };
    if (n_threads <= 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
      for (auto& t : pool) t.join();
    }

    for (int k = 0; k < cfg.starts; ++k) {
      SphericalColoring c;
      c.colors = std::move(results[k]);
      c.r = r;
      c.residual = exact_residual(rels, c.colors);
      if (c.residual < cfg.tol_accept) found.push_back(std::move(c));
    }
  }

  // canonical order before merging keeps the output independent of the
  // execution schedule
  std::vector<SphericalColoring> fixed;
  fixed.reserve(found.size());
  for (const auto& c : found) fixed.push_back(gauge_fix(c));
  std::stable_sort(fixed.begin(), fixed.end(),
                   [](const SphericalColoring& a, const SphericalColoring& b) {
                     for (std::size_t i = 0; i < a.colors.size(); ++i) {
                       const Vec3 &va = a.colors[i].v, &vb = b.colors[i].v;
                       if (va.x != vb.x) return va.x < vb.x;
                       if (va.y != vb.y) return va.y < vb.y;
                       if (va.z != vb.z) return va.z < vb.z;
                     }
                     return false;
                   });

  return orbit_reduce(fixed, cfg.dedupe_eps);
}

}  // namespace sphandle
