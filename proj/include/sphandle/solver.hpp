#pragma once

#include <cstdint>
#include <vector>

#include "sphandle/knot.hpp"
#include "sphandle/quandle.hpp"
#include "sphandle/su2.hpp"

namespace sphandle {

// Arc -> quandle element assignment satisfying every crossing triple.
struct FiniteColoring {
  std::vector<int> assignment;

  bool operator==(const FiniteColoring&) const = default;
  bool operator<(const FiniteColoring& o) const { return assignment < o.assignment; }
};

// Complete list of colorings by backtracking with constraint propagation;
// includes the constant colorings.  Sorted lexicographically.
std::vector<FiniteColoring> enumerate_finite(const KnotDiagram& d, const FiniteQuandle& q);

// Arc -> S^2(r) assignment.  residual is the max crossing-equation error
// re-evaluated with the exact quandle operation, not the optimizer's value.
struct SphericalColoring {
  std::vector<TangentVector> colors;
  double r = 0.0;
  double residual = 0.0;
};

struct SolverConfig {
  int starts = 64;
  int max_iters = 500;
  double tol_residual = 1e-12;  // optimizer target
  double tol_accept = 1e-9;     // max residual for a returned coloring
  std::uint64_t seed = 0;
  double dedupe_eps = 1e-6;
  int threads = 0;  // 0: SPHANDLE_THREADS env, else hardware concurrency

  void validate() const;
};

enum class ColoringClass { Trivial, Nontrivial };

// Trivial iff every pair of colors is equal or antipodal (the trivial
// subquandles of S^2(r) are the subsets of some {p, -p}).  The default band
// matches the 1e-9 commutator band of is_abelian: the commutator defect of
// two images grows linearly in the axis angle, and the axes of exp(X) are
// the colors themselves, so aligned thresholds keep
// classify(c) <=> is_abelian(Phi c) coherent on borderline colorings.
ColoringClass classify(const SphericalColoring& c, double eps_rel = 1e-9);

const char* to_string(ColoringClass c);

// Canonical position in the SO(3) orbit: first color at the north pole
// (0,0,r), first color not collinear with it rotated into the x > 0 half of
// the xz-plane.  Idempotent and constant on orbits.
SphericalColoring gauge_fix(const SphericalColoring& c);

// Optimal rotation aligning colorings as ordered tuples (orthogonal
// Procrustes), then verified pointwise within eps.
bool same_orbit(const SphericalColoring& a, const SphericalColoring& b, double eps);

struct OrbitReduction {
  std::vector<SphericalColoring> representatives;  // gauge-fixed
  std::vector<int> orbit_sizes;                    // inputs merged into each
};

OrbitReduction orbit_reduce(const std::vector<SphericalColoring>& cs, double eps);

// Multi-start projected Gauss-Newton over the product of spheres.  Returns
// gauge-fixed orbit representatives with residual < cfg.tol_accept; the
// constant coloring is always present (injected analytically, residual 0).
// Multi-start search is not a completeness proof.
OrbitReduction solve_spherical(const KnotDiagram& d, double r, const SolverConfig& cfg);

// ---- optimizer internals, exposed for verification -------------------------

// Ambient residual of the crossing equations, 3 entries per relation.  The
// formula is polynomial in the coordinates (no normalization inside) and
// coincides with the quandle operation on the constraint manifold.
std::vector<double> crossing_residual(const QuandleRelationSet& rels,
                                      const std::vector<Vec3>& colors, double r);

// Dense row-major Jacobian of crossing_residual, (3 m) x (3 n).
std::vector<double> crossing_jacobian(const QuandleRelationSet& rels,
                                      const std::vector<Vec3>& colors, double r);

}  // namespace sphandle
