// sphandle: knot colorings by spherical quandles and the matching SU(2)
// representations.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
// problems.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "sphandle/correspondence.hpp"
#include "sphandle/error.hpp"
#include "sphandle/json_io.hpp"
#include "sphandle/rng.hpp"
#include "sphandle/knot.hpp"
#include "sphandle/solver.hpp"
#include "sphandle/spherical.hpp"
#include "sphandle/version.hpp"

namespace {

using namespace sphandle;

constexpr double kPi = std::numbers::pi;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::AuditFailure:
    case ErrorKind::CorrespondenceViolation:
    case ErrorKind::NotInRepSet:
    case ErrorKind::TraceMismatch:
      return 1;
    default:
      return 2;
  }
}

void write_output(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) fail(ErrorKind::MalformedInput, "cannot write '" + out_path + "'");
    out << text;
  }
}

struct KnotArgs {
  std::string name;
  std::string pd;

  KnotDiagram load() const {
    if (!name.empty()) return builtin(name);
    return parse_pd(pd);
  }
  std::string describe() const { return !name.empty() ? name : pd; }
};

void add_knot_options(CLI::App* cmd, KnotArgs& args) {
  auto* n = cmd->add_option("--knot", args.name, "builtin knot name");
  auto* p = cmd->add_option("--pd", args.pd, "PD code, e.g. [[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
  n->excludes(p);
}

struct AxiomsArgs {
  std::string table_file;
  int dihedral_n = -1;
  int trivial_n = -1;
};

int run_axioms(const AxiomsArgs& a) {
  FiniteQuandle q;
  std::string label;
  if (!a.table_file.empty()) {
    q = load_finite_quandle(a.table_file);
    label = a.table_file;
  } else if (a.dihedral_n >= 0) {
    q = dihedral(a.dihedral_n);
    label = "dihedral(" + std::to_string(a.dihedral_n) + ")";
  } else {
    q = trivial(a.trivial_n);
    label = "trivial(" + std::to_string(a.trivial_n) + ")";
  }

  const AxiomReport rep = check_axioms(q);
  auto line = [](const char* axiom, bool ok) {
    std::cout << axiom << ": " << (ok ? "pass" : "FAIL") << "\n";
  };
  std::cout << label << ", n = " << q.n << "\n";
  line("Q1 idempotence", rep.q1_ok);
  line("Q2 right-invertibility", rep.q2_ok);
  line("Q3 self-distributivity", rep.q3_ok);
  for (const auto& w : rep.violations) {
    std::cout << "witness: (";
    for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
    std::cout << ")\n";
  }
  return rep.all_ok() ? 0 : 1;
}

struct ColorArgs {
  KnotArgs knot;
  std::string finite;
  double r = -1.0;
  double r_deg = -1.0;
  SolverConfig cfg;
  std::string out;
};

double resolve_radius(double r, double r_deg) {
  if (r_deg >= 0.0) return r_deg * kPi / 180.0;
  return r;
}

int run_color(const ColorArgs& a) {
  const KnotDiagram d = a.knot.load();

  RunManifest manifest;
  manifest.command = "color";
  manifest.knot = a.knot.describe();
  manifest.tool_version = kVersion;
  manifest.seed = a.cfg.seed;
  manifest.timestamp = manifest_timestamp();

  if (!a.finite.empty()) {
    const FiniteQuandle q = load_finite_quandle(a.finite);
    const auto colorings = enumerate_finite(d, q);
    manifest.parameters = {{"finite", a.finite}, {"n", q.n}};

    json out{{"knot", manifest.knot},
             {"quandle", to_json(q)},
             {"count", colorings.size()},
             {"colorings", json::array()},
             {"manifest", to_json(manifest)}};
    for (const auto& c : colorings) out["colorings"].push_back(c.assignment);
    write_output(out, a.out);
    std::cerr << colorings.size() << " colorings\n";
    return 0;
  }

  const double r = resolve_radius(a.r, a.r_deg);
  if (!(r > 0.0 && r < kPi)) {
    fail(ErrorKind::OutOfDomain, "color: --r must lie in (0, pi)");
  }
  manifest.parameters = {{"r", r}};
  manifest.config = {{"starts", a.cfg.starts},
                     {"max_iters", a.cfg.max_iters},
                     {"tol_residual", a.cfg.tol_residual},
                     {"tol_accept", a.cfg.tol_accept},
                     {"dedupe_eps", a.cfg.dedupe_eps}};

  const OrbitReduction result = solve_spherical(d, r, a.cfg);

  int trivial_count = 0;
  json colorings = json::array();
  for (std::size_t i = 0; i < result.representatives.size(); ++i) {
    const auto& c = result.representatives[i];
    if (classify(c) == ColoringClass::Trivial) ++trivial_count;
    colorings.push_back(to_json(c));
  }
  json out{{"knot", manifest.knot},
           {"r", r},
           {"diagram", to_json(d)},
           {"colorings", colorings},
           {"orbits", result.representatives.size()},
           {"orbit_sizes", result.orbit_sizes},
           {"manifest", to_json(manifest)}};
  write_output(out, a.out);

  const int nontrivial =
      static_cast<int>(result.representatives.size()) - trivial_count;
  std::cerr << "orbits: " << result.representatives.size() << " (" << trivial_count
            << " trivial, " << nontrivial << " nontrivial)\n"
            << "note: multi-start search; orbit list is not a completeness proof\n";
  return 0;
}

struct CorrespondArgs {
  KnotArgs knot;
  double r = -1.0;
  double r_deg = -1.0;
  std::string from_colorings;
  SolverConfig cfg;
  double trace_tol = 1e-9;
  bool matrix = false;
  std::string out;
};

int run_correspond(const CorrespondArgs& a) {
  const KnotDiagram d = a.knot.load();
  const WirtingerPresentation pres = wirtinger(d);
  const double r = resolve_radius(a.r, a.r_deg);
  if (!(r > 0.0 && r < kPi)) {
    fail(ErrorKind::OutOfDomain, "correspond: --r must lie in (0, pi)");
  }

  std::vector<SphericalColoring> colorings;
  if (!a.from_colorings.empty()) {
    std::ifstream in(a.from_colorings);
    if (!in) {
      fail(ErrorKind::MalformedInput,
           "cannot open colorings file '" + a.from_colorings + "'");
    }
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      fail(ErrorKind::MalformedInput, std::string("colorings file: ") + e.what());
    }
    const json& list = doc.is_array() ? doc : doc.at("colorings");
    for (const auto& c : list) colorings.push_back(coloring_from_json(c, r));
  } else {
    const OrbitReduction result = solve_spherical(d, r, a.cfg);
    colorings = result.representatives;
  }

  RunManifest manifest;
  manifest.command = "correspond";
  manifest.knot = a.knot.describe();
  manifest.parameters = {{"r", r}, {"trace_tol", a.trace_tol}};
  manifest.tool_version = kVersion;
  manifest.seed = a.cfg.seed;
  manifest.timestamp = manifest_timestamp();

  json audits = json::array();
  json reps = json::array();
  bool all_pass = true;
  std::string failed_clause;

  for (std::size_t i = 0; i < colorings.size(); ++i) {
    const auto& c = colorings[i];
    const SU2Representation rho = coloring_to_rep(c, pres);
    const SphericalColoring back = rep_to_coloring(rho, r, a.trace_tol);

    double round_trip = 0.0;
    for (std::size_t k = 0; k < c.colors.size(); ++k) {
      round_trip = std::max(round_trip, distance(back.colors[k], c.colors[k]));
    }

    AuditReport audit = equivalence_audit(c, pres, a.cfg.seed + i);
    audit.clauses.push_back({"round_trip", round_trip <= 1e-10, round_trip});
    audit.clauses.push_back(
        {"relations", rho.max_relation_error <= 1e-9, rho.max_relation_error});

    if (!audit.all_pass()) {
      all_pass = false;
      if (failed_clause.empty()) failed_clause = audit.first_failure();
    }
    audits.push_back(to_json(audit));
    reps.push_back(to_json(rho, a.matrix));
  }

  json out{{"knot", manifest.knot},
           {"r", r},
           {"count", colorings.size()},
           {"representations", reps},
           {"audits", audits},
           {"manifest", to_json(manifest)}};
  write_output(out, a.out);

  if (!all_pass) {
    std::cerr << "audit failure: " << failed_clause << "\n";
    return 1;
  }
  std::cerr << "all audits passed for " << colorings.size() << " colorings\n";
  return 0;
}

struct IsoCheckArgs {
  int samples = 10000;
  std::uint64_t seed = 1;
  bool flip_cs = false;
};

int run_isocheck(const IsoCheckArgs& a) {
  if (a.samples < 1) fail(ErrorKind::ConfigError, "isocheck: --samples must be >= 1");
  bool ok = true;
  auto report = [&ok](const char* what, double residual, double threshold) {
    const bool pass = residual < threshold;
    ok = ok && pass;
    std::cout << what << ": " << residual << (pass ? " (pass, < " : " (FAIL, >= ")
              << threshold << ")\n";
  };

  report("h homomorphism residual", h_map_hom_residual(a.samples, a.seed), 1e-12);
  report("exp h identity residual",
         h_map_exp_identity_residual(a.samples, mix_seed(a.seed, 1)), 1e-12);

  const int pair_samples = std::min(a.samples, 1000);
  double worst_cs = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double r = kPi * i / 11.0;
    worst_cs = std::max(worst_cs, clark_saito_consistency_residual(
                                      r, pair_samples, mix_seed(a.seed, 2 + i),
                                      a.flip_cs));
  }
  report("clark-saito consistency residual", worst_cs, 1e-10);

  bool inner_ok = true;
  for (int i = 1; i <= 10; ++i) {
    const double r = kPi * i / 11.0;
    inner_ok = inner_ok &&
               inner_rotation_check(r, std::min(a.samples, 200), mix_seed(a.seed, 100 + i));
  }
  std::cout << "inner rotation check: " << (inner_ok ? "pass" : "FAIL") << "\n";
  ok = ok && inner_ok;

  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical quandle colorings and SU(2) representations of knot groups"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  AxiomsArgs axioms_args;
  auto* axioms = app.add_subcommand("axioms", "check the quandle axioms of a Cayley table");
  auto* table_opt = axioms->add_option("--table", axioms_args.table_file, "Cayley table JSON file");
  auto* dihedral_opt = axioms->add_option("--dihedral", axioms_args.dihedral_n, "dihedral quandle size");
  auto* trivial_opt = axioms->add_option("--trivial", axioms_args.trivial_n, "trivial quandle size");
  table_opt->excludes(dihedral_opt)->excludes(trivial_opt);
  dihedral_opt->excludes(trivial_opt);

  ColorArgs color_args;
  auto* color = app.add_subcommand("color", "compute quandle colorings of a knot");
  add_knot_options(color, color_args.knot);
  color->add_option("--finite", color_args.finite,
                    "finite quandle: dihedralN, trivialN, or table file");
  color->add_option("--r", color_args.r, "sphere radius in radians, in (0, pi)");
  color->add_option("--r-deg", color_args.r_deg, "sphere radius in degrees");
  color->add_option("--starts", color_args.cfg.starts, "multi-start count");
  color->add_option("--seed", color_args.cfg.seed, "RNG seed");
  color->add_option("--tol", color_args.cfg.tol_accept, "acceptance residual");
  color->add_option("--out", color_args.out, "output JSON path (default stdout)");

  CorrespondArgs corr_args;
  auto* corr = app.add_subcommand(
      "correspond", "audit the coloring <-> representation correspondence");
  add_knot_options(corr, corr_args.knot);
  corr->add_option("--r", corr_args.r, "sphere radius in radians, in (0, pi)");
  corr->add_option("--r-deg", corr_args.r_deg, "sphere radius in degrees");
  corr->add_option("--from-colorings", corr_args.from_colorings,
                   "read colorings from a color output file instead of solving");
  corr->add_option("--starts", corr_args.cfg.starts, "multi-start count");
  corr->add_option("--seed", corr_args.cfg.seed, "RNG seed");
  corr->add_option("--trace-tol", corr_args.trace_tol, "trace tolerance for log");
  corr->add_flag("--matrix", corr_args.matrix, "emit 2x2 complex matrices too");
  corr->add_option("--out", corr_args.out, "output JSON path (default stdout)");

  IsoCheckArgs iso_args;
  auto* iso = app.add_subcommand("isocheck", "sampled isomorphism and rotation checks");
  iso->add_option("--samples", iso_args.samples, "sample count")->required();
  iso->add_option("--seed", iso_args.seed, "RNG seed");
  iso->add_flag("--flip-cs-orientation", iso_args.flip_cs,
                "debug: flip the rotation orientation (check must then fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (axioms->parsed()) {
      if (axioms_args.table_file.empty() && axioms_args.dihedral_n < 0 &&
          axioms_args.trivial_n < 0) {
        std::cerr << "axioms: one of --table/--dihedral/--trivial is required\n";
        return 2;
      }
      return run_axioms(axioms_args);
    }
    if (color->parsed()) {
      if (color_args.knot.name.empty() && color_args.knot.pd.empty()) {
        std::cerr << "color: one of --knot/--pd is required\n";
        return 2;
      }
      if (color_args.finite.empty() && color_args.r < 0.0 && color_args.r_deg < 0.0) {
        std::cerr << "color: one of --finite/--r/--r-deg is required\n";
        return 2;
      }
      return run_color(color_args);
    }
    if (corr->parsed()) {
      if (corr_args.knot.name.empty() && corr_args.knot.pd.empty()) {
        std::cerr << "correspond: one of --knot/--pd is required\n";
        return 2;
      }
      if (corr_args.r < 0.0 && corr_args.r_deg < 0.0) {
        std::cerr << "correspond: --r or --r-deg is required\n";
        return 2;
      }
      return run_correspond(corr_args);
    }
    if (iso->parsed()) return run_isocheck(iso_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
