#include "g2cal/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "g2cal/report.hpp"
#include "g2cal/verify.hpp"

namespace g2cal {

namespace {

class CliDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliDataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_example(const std::string& name) {
  for (const auto& n : catalog_names())
    if (n == name) return true;
  return false;
}

/// A structure loaded either from the catalog or from a structure file.
struct Loaded {
  std::optional<SU3Structure> su3;
  std::optional<G2Structure> g2;
  Form rho{6, 2};
};

Loaded load_structure(const std::string& spec) {
  if (is_example(spec)) {
    auto e = get_example(spec);
    Loaded l;
    l.su3 = e.su3;
    l.g2 = e.g2;
    return l;
  }
  auto file = parse_model(read_file(spec));
  if (!file.omega || !file.psi_plus || !file.psi_minus)
    throw CliDataError("structure file must define omega, psi+ and psi-");
  Loaded l;
  if (file.rho) l.rho = *file.rho;
  if (file.model.n() == 6) {
    l.su3 = make_su3(file.model, *file.omega, *file.psi_plus,
                     *file.psi_minus);
  } else {
    throw CliDataError("expected a 6-generator model");
  }
  return l;
}

/// The 7-slot structure of the entry: its own if present, otherwise the
/// product (or circle extension when a curvature is attached).
G2Structure to_g2(const Loaded& l) {
  if (l.g2) return *l.g2;
  if (!l.rho.is_zero()) return build_circle_extension(*l.su3, l.rho);
  return build_product(*l.su3);
}

int cmd_validate(const std::string& spec, bool json, std::ostream& out) {
  auto l = load_structure(spec);
  Json rep;
  rep["valid"] = true;
  rep["kind"] = l.su3 ? (l.g2 ? "su3+g2" : "su3") : "g2";
  const FrameModel& m = l.su3 ? l.su3->model : l.g2->model;
  rep["warped"] = m.warped();
  if (json)
    out << rep.dump(2) << "\n";
  else
    out << "valid " << rep["kind"].get<std::string>()
        << (m.warped() ? " (warped)" : "") << "\n";
  return 0;
}

int cmd_su3_report(const std::string& spec, bool json, std::ostream& out) {
  auto l = load_structure(spec);
  if (!l.su3) throw CliDataError("'" + spec + "' has no 6-dimensional structure");
  auto rep = su3_torsion(*l.su3);
  if (json) {
    out << su3_report_json(rep).dump(2) << "\n";
    return 0;
  }
  out << "half_flat: " << (rep.half_flat ? "yes" : "no") << "\n";
  out << "rank(W1+W2): " << rep.rank_w12 << "\n";
  out << "classes:";
  for (const auto& c : rep.classes()) out << ' ' << c;
  out << "\n";
  return 0;
}

int cmd_g2_report(const std::string& spec, bool json, std::ostream& out) {
  auto l = load_structure(spec);
  auto rep = g2_torsion(to_g2(l));
  if (json) {
    out << g2_report_json(rep).dump(2) << "\n";
    return 0;
  }
  out << "calibrated: " << (rep.calibrated ? "yes" : "no") << "\n";
  out << "cocalibrated: " << (rep.cocalibrated ? "yes" : "no") << "\n";
  out << "nearly_parallel: " << (rep.nearly_parallel ? "yes" : "no") << "\n";
  out << "classes:";
  for (const auto& c : rep.classes()) out << ' ' << c;
  out << "\n";
  return 0;
}

int cmd_correspondence(const std::string& spec,
                       const std::string& rho_path, bool json,
                       std::ostream& out) {
  auto l = load_structure(spec);
  if (!l.su3)
    throw CliDataError("'" + spec + "' has no 6-dimensional structure");
  Form rho = l.rho;
  if (!rho_path.empty()) {
    auto file = parse_model(read_file(rho_path));
    if (!file.rho) throw CliDataError("curvature file must define rho");
    rho = *file.rho;
  }
  auto g = rho.is_zero() ? build_product(*l.su3)
                         : build_circle_extension(*l.su3, rho);
  auto rep = verify_correspondence(*l.su3, rho, g);
  if (json)
    out << correspondence_json(rep).dump(2) << "\n";
  else
    out << (rep.ok() ? "correspondence verified"
                     : "correspondence FAILED")
        << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_flow(const std::string& spec, double t0, double t1, double dt,
             const std::string& csv_path, bool json, std::ostream& out) {
  auto l = load_structure(spec);
  if (!l.su3)
    throw CliDataError("'" + spec + "' has no 6-dimensional structure");
  const auto& s = *l.su3;
  std::vector<Form> gens;
  for (int i = 1; i <= 6; ++i) gens.push_back(s.model.d_generator(i));
  FrameModel model(6, std::move(gens), Metric::orthonormal(6));
  // Warped entries provide initial data by evaluating the symbolic
  // coefficients at the start time.
  Rational rt0(t0);
  auto at_t0 = [&](const Form& f) {
    return f.map_coeffs(
        [&](const RingElement& c) { return RingElement(c.eval(rt0)); });
  };
  auto states = flow_run(model, at_t0(s.omega), at_t0(s.psi_plus), t0, t1, dt);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw CliDataError("cannot write '" + csv_path + "'");
    csv << flow_csv(states);
  }
  double compat = 0, closure = 0, lef = 0;
  for (const auto& st : states) {
    compat = std::max(compat, st.compat_residual);
    closure = std::max(closure, st.closure_residual);
    lef = std::max(lef, st.lefschetz_residual);
  }
  Json rep;
  rep["steps"] = states.size() - 1;
  rep["t_final"] = states.back().t;
  rep["lambda_final"] = states.back().lambda;
  rep["max_compat_residual"] = compat;
  rep["max_closure_residual"] = closure;
  rep["max_lefschetz_residual"] = lef;
  if (json)
    out << rep.dump(2) << "\n";
  else
    out << "steps: " << states.size() - 1 << "\nt_final: "
        << states.back().t << "\nmax compat residual: " << compat
        << "\nmax closure residual: " << closure << "\n";
  return 0;
}

int cmd_verify_paper(bool json, std::ostream& out) {
  auto results = run_acceptance();
  int fails = 0;
  if (json) {
    Json arr = Json::array();
    for (const auto& r : results) {
      Json j;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["detail"] = r.detail;
      arr.push_back(j);
      if (!r.passed) ++fails;
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) out << " — " << r.detail;
      out << "\n";
      if (!r.passed) ++fails;
    }
  }
  return fails == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact torsion classification for SU(3)- and G2-structures"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit structured JSON reports");

  std::string spec, rho_path, csv_path;
  double t0 = 1.0, t1 = 1.2, dt = 1e-3;

  auto* validate = app.add_subcommand("validate", "parse and validate a structure file");
  validate->add_option("file", spec)->required();
  auto* su3r = app.add_subcommand("su3-report", "6-dimensional torsion report");
  su3r->add_option("structure", spec)->required();
  auto* g2r = app.add_subcommand("g2-report", "7-dimensional torsion report");
  g2r->add_option("structure", spec)->required();
  auto* corr = app.add_subcommand("correspondence", "verify the 6-to-7 torsion tables");
  corr->add_option("structure", spec)->required();
  corr->add_option("--rho", rho_path, "curvature 2-form file");
  auto* flow = app.add_subcommand("flow", "integrate the half-flat evolution");
  flow->add_option("structure", spec)->required();
  flow->add_option("--t0", t0);
  flow->add_option("--t1", t1);
  flow->add_option("--dt", dt);
  flow->add_option("--csv", csv_path, "trajectory output file");
  auto* verify = app.add_subcommand("verify-paper", "run the full regression suite");
  auto* list = app.add_subcommand("list-examples", "names of built-in structures");
  // Let `--json` appear after the subcommand as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(spec, json, out);
    if (su3r->parsed()) return cmd_su3_report(spec, json, out);
    if (g2r->parsed()) return cmd_g2_report(spec, json, out);
    if (corr->parsed()) return cmd_correspondence(spec, rho_path, json, out);
    if (flow->parsed())
      return cmd_flow(spec, t0, t1, dt, csv_path, json, out);
    if (verify->parsed()) return cmd_verify_paper(json, out);
    if (list->parsed()) {
      for (const auto& n : catalog_names()) out << n << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace g2cal
