#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphandle/knot.hpp"
#include "sphandle/solver.hpp"
#include "sphandle/su2.hpp"

namespace sphandle {

// Representation of the knot group by generator images.  Words are evaluated
// on demand; every Wirtinger relation out = over^-sign in over^sign holds
// within max_relation_error.
struct SU2Representation {
  std::vector<UnitQuaternion> images;
  WirtingerPresentation presentation;
  double max_relation_error = 0.0;

  double meridian_trace() const { return images[presentation.meridian_index].trace(); }
};

// Phi: colorings -> fixed-trace representations, images[g] = exp(color[g]).
// Raises CorrespondenceViolation if a relation error exceeds
// max(1e-10, 10 sqrt(c.residual)) -- a solver artifact, impossible for exact
// colorings.
SU2Representation coloring_to_rep(const SphericalColoring& c,
                                  const WirtingerPresentation& p);

// Phi^-1: requires every generator trace within trace_tol of 2 cos r
// (otherwise the representation is outside the fixed-trace class) and no
// image at +-identity.
SphericalColoring rep_to_coloring(const SU2Representation& rho, double r,
                                  double trace_tol = 1e-9);

// All pairwise commutators within tol of +-identity (the center acts
// trivially).
bool is_abelian(const SU2Representation& rho, double tol = 1e-9);

struct AuditClause {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct AuditReport {
  std::vector<AuditClause> clauses;

  bool all_pass() const;
  std::string first_failure() const;
};

// Executable form of the correspondence properties for one coloring:
//   trivial_iff_abelian  classify(c) = TRIVIAL  <=>  Phi(c) abelian
//   orbit_conjugacy      Phi(R c) conjugate to Phi(c) by the lifted quaternion
//   fixed_trace          every generator trace = 2 cos r within 1e-10
AuditReport equivalence_audit(const SphericalColoring& c,
                              const WirtingerPresentation& p,
                              std::uint64_t seed = 20260810);

}  // namespace sphandle
