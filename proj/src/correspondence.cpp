#include "sphandle/correspondence.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sphandle/error.hpp"
#include "sphandle/rng.hpp"
#include "sphandle/spherical.hpp"

namespace sphandle {

namespace {

UnitQuaternion conjugate_by_power(const UnitQuaternion& base,
                                  const UnitQuaternion& by, int sign) {
  // by^-sign * base * by^sign
  const UnitQuaternion b = sign > 0 ? by : by.inverse();
  return qmul(qmul(b.inverse(), base), b);
}

double relation_error(const SU2Representation& rho, const CrossingRelation& rel) {
  const UnitQuaternion got =
      conjugate_by_power(rho.images[rel.in_arc], rho.images[rel.over_arc], rel.sign);
  return distance(got, rho.images[rel.out_arc]);
}

}  // namespace

SU2Representation coloring_to_rep(const SphericalColoring& c,
                                  const WirtingerPresentation& p) {
  if (static_cast<int>(c.colors.size()) != p.n_generators) {
    fail(ErrorKind::MalformedInput,
         "coloring_to_rep: arc count does not match the presentation");
  }
  SU2Representation rho;
  rho.presentation = p;
  rho.images.reserve(c.colors.size());
  for (const auto& color : c.colors) rho.images.push_back(exp_tangent(color));

  for (const auto& rel : p.relations) {
    rho.max_relation_error = std::max(rho.max_relation_error, relation_error(rho, rel));
  }
  // Exact colorings make the relations hold to rounding; the floor keeps the
  // guard meaningful at residual 0.
  const double guard = std::max(1e-10, 10.0 * std::sqrt(std::max(c.residual, 0.0)));
  if (rho.max_relation_error > guard) {
    std::ostringstream msg;
    msg << "coloring_to_rep: relation error " << rho.max_relation_error
        << " exceeds " << guard << " for coloring residual " << c.residual;
    fail(ErrorKind::CorrespondenceViolation, msg.str());
  }

  const double want = 2.0 * std::cos(c.r);
  for (const auto& g : rho.images) {
    if (std::abs(g.trace() - want) > 1e-9) {
      fail(ErrorKind::CorrespondenceViolation,
           "coloring_to_rep: generator trace drifted off 2 cos r");
    }
  }
  return rho;
}

SphericalColoring rep_to_coloring(const SU2Representation& rho, double r,
                                  double trace_tol) {
  if (!(r > 0.0 && r < std::numbers::pi)) {
    fail(ErrorKind::OutOfDomain, "rep_to_coloring: r must lie in (0, pi)");
  }
  const double want = 2.0 * std::cos(r);
  for (const auto& g : rho.images) {
    if (std::abs(g.trace() - want) > trace_tol) {
      std::ostringstream msg;
      msg << "rep_to_coloring: generator trace " << g.trace() << " != 2 cos r = "
          << want << "; representation is outside the fixed-trace class";
      fail(ErrorKind::NotInRepSet, msg.str());
    }
  }

  SphericalColoring c;
  c.r = r;
  c.colors.reserve(rho.images.size());
  for (const auto& g : rho.images) c.colors.push_back(log_unit(g, r, trace_tol));

  double worst = 0.0;
  for (const auto& rel : rho.presentation.relations) {
    const TangentVector got =
        rel.sign > 0 ? op_augmented(c.colors[rel.in_arc], c.colors[rel.over_arc])
                     : op_augmented_inverse(c.colors[rel.in_arc], c.colors[rel.over_arc]);
    worst = std::max(worst, distance(got, c.colors[rel.out_arc]));
  }
  c.residual = worst;
  return c;
}

bool is_abelian(const SU2Representation& rho, double tol) {
  const UnitQuaternion e = UnitQuaternion::identity();
  for (std::size_t i = 0; i < rho.images.size(); ++i) {
    for (std::size_t j = i + 1; j < rho.images.size(); ++j) {
      const UnitQuaternion& g = rho.images[i];
      const UnitQuaternion& h = rho.images[j];
      const UnitQuaternion comm = qmul(qmul(g, h), qmul(g.inverse(), h.inverse()));
      if (distance_up_to_sign(comm, e) > tol) return false;
    }
  }
  return true;
}

bool AuditReport::all_pass() const {
  for (const auto& c : clauses) {
    if (!c.pass) return false;
  }
  return true;
}

std::string AuditReport::first_failure() const {
  for (const auto& c : clauses) {
    if (!c.pass) return c.name;
  }
  return "";
}

AuditReport equivalence_audit(const SphericalColoring& c,
                              const WirtingerPresentation& p, std::uint64_t seed) {
  AuditReport report;
  const SU2Representation rho = coloring_to_rep(c, p);

  // (a) trivial coloring <=> abelian representation
  {
    double comm_defect = 0.0;
    const UnitQuaternion e = UnitQuaternion::identity();
    for (std::size_t i = 0; i < rho.images.size(); ++i) {
      for (std::size_t j = i + 1; j < rho.images.size(); ++j) {
        const UnitQuaternion comm =
            qmul(qmul(rho.images[i], rho.images[j]),
                 qmul(rho.images[i].inverse(), rho.images[j].inverse()));
        comm_defect = std::max(comm_defect, distance_up_to_sign(comm, e));
      }
    }
    const bool trivial = classify(c) == ColoringClass::Trivial;
    const bool abelian = is_abelian(rho);
    report.clauses.push_back({"trivial_iff_abelian", trivial == abelian, comm_defect});
  }

  // (b) rotating the coloring conjugates the representation by the lift
  {
    Rng rng(seed);
    const UnitQuaternion g0 = random_unit_quaternion(rng);
    const std::array<Vec3, 3> m = adjoint_matrix(g0);

    SphericalColoring rotated = c;
    for (auto& color : rotated.colors) {
      const Vec3& v = color.v;
      color = TangentVector{m[0] * v.x + m[1] * v.y + m[2] * v.z};
    }
    const SU2Representation rho_rot = coloring_to_rep(rotated, p);

    const UnitQuaternion lift = rotation_lift(m);
    double worst = 1e300;
    for (const UnitQuaternion& g : {lift, -lift}) {
      double d = 0.0;
      for (std::size_t k = 0; k < rho.images.size(); ++k) {
        const UnitQuaternion expect = qmul(qmul(g.inverse(), rho.images[k]), g);
        d = std::max(d, distance(rho_rot.images[k], expect));
      }
      worst = std::min(worst, d);
    }
    report.clauses.push_back({"orbit_conjugacy", worst <= 1e-9, worst});
  }

  // (c) fixed trace on every generator
  {
    const double want = 2.0 * std::cos(c.r);
    double worst = 0.0;
    for (const auto& g : rho.images) {
      worst = std::max(worst, std::abs(g.trace() - want));
    }
    report.clauses.push_back({"fixed_trace", worst <= 1e-10, worst});
  }

  return report;
}

}  // namespace sphandle
