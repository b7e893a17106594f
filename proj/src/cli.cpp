#include "srsphere/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "srsphere/geodesics.hpp"
#include "srsphere/htype.hpp"
#include "srsphere/numerics.hpp"
#include "srsphere/shooting.hpp"
#include "srsphere/subelliptic.hpp"
#include "srsphere/verify.hpp"
#include "srsphere/version.hpp"

namespace srsphere {

namespace {

using nlohmann::json;

// Accepts decimal ("0.75") and exact-rational ("3/4") tokens.
double parse_scalar(const std::string& tok) {
  if (tok.find('/') != std::string::npos) return Rational::from_string(tok).to_double();
  size_t pos = 0;
  const double v = std::stod(tok, &pos);
  if (pos != tok.size()) throw std::invalid_argument("cannot parse number '" + tok + "'");
  return v;
}

Eigen::VectorXd parse_vector(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(parse_scalar(tok));
  if (vals.empty()) throw std::invalid_argument("empty vector flag");
  Eigen::VectorXd v(static_cast<int>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
  return v;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json header(const std::string& command, const json& config) {
  return json{{"tool", kToolName}, {"version", kVersion}, {"command", command}, {"config", config}};
}

void csv_header(std::ostream& os, const std::string& command, const json& config) {
  os << "# " << kToolName << " " << kVersion << "\n";
  os << "# command: " << command << "\n";
  os << "# config: " << config.dump() << "\n";
}

class OutputTarget {
public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path != "-" && !path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
  std::ofstream file_;
  std::ostream& fallback_;
};

Space parse_space(const std::string& s) {
  if (s == "s2n1") return Space::Contact;
  if (s == "s4n3") return Space::Quaternionic;
  throw std::invalid_argument("unknown space '" + s + "' (expected s2n1 or s4n3)");
}

// ------------------------------------------------------------------ trace ---

int run_trace(const std::string& space_s, int n, const std::string& p_s, const std::string& v_s,
              double t0, double t1, int samples, const std::string& out_path,
              const std::string& format, std::ostream& fallback) {
  const Space space = parse_space(space_s);
  const int dim = space == Space::Contact ? 2 * n + 2 : 4 * n + 4;
  Eigen::VectorXd p = parse_vector(p_s), v = parse_vector(v_s);
  if (p.size() != dim || v.size() != dim)
    throw std::invalid_argument("trace: --p/--v must have dimension " + std::to_string(dim));

  GeodesicSpec spec = GeodesicSpec::make(space, p, v);
  Trace tr = trace_geodesic(spec, t0, t1, samples);

  json config{{"space", space_s}, {"n", n},       {"p", vec_to_json(p)}, {"v", vec_to_json(v)},
              {"t0", t0},         {"t1", t1},     {"samples", samples},  {"format", format},
              {"out", out_path}};
  OutputTarget target(out_path, fallback);
  std::ostream& os = target.stream();

  if (format == "csv") {
    csv_header(os, "trace", config);
    os << "t";
    for (int i = 0; i < dim; ++i) os << ",x" << i;
    os << ",speed";
    for (size_t a = 0; a < spec.moments.size(); ++a) os << ",horiz_residual_" << a + 1;
    os << "\n";
    for (size_t k = 0; k < tr.times.size(); ++k) {
      os << fmt17(tr.times[k]);
      for (int i = 0; i < dim; ++i) os << "," << fmt17(tr.points[k][i]);
      os << "," << fmt17(tr.speed[k]);
      for (double r : tr.horiz_residual[k]) os << "," << fmt17(r);
      os << "\n";
    }
    return 0;
  }

  json doc = header("trace", config);
  doc["spec"] = {{"p", vec_to_json(spec.p)},
                 {"v", vec_to_json(spec.v)},
                 {"moments", spec.moments},
                 {"sr_speed", spec.sr_speed()}};
  json rows = json::array();
  for (size_t k = 0; k < tr.times.size(); ++k) {
    rows.push_back(json{{"t", tr.times[k]},
                        {"point", vec_to_json(tr.points[k])},
                        {"speed", tr.speed[k]},
                        {"horiz_residual", tr.horiz_residual[k]}});
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------ shoot ---

int run_shoot(const std::string& space_s, int n, const std::string& p_s, const std::string& q_s,
              double t_horizon, int starts, uint64_t seed, const std::string& out_path,
              std::ostream& fallback) {
  const Space space = parse_space(space_s);
  const int dim = space == Space::Contact ? 2 * n + 2 : 4 * n + 4;
  Eigen::VectorXd p = parse_vector(p_s), q = parse_vector(q_s);
  if (p.size() != dim || q.size() != dim)
    throw std::invalid_argument("shoot: --p/--q must have dimension " + std::to_string(dim));

  ShootingProblem prob = ShootingProblem::make(space, p, q, t_horizon);
  ShootingConfig config;
  config.n_starts = starts;
  config.seed = seed;
  config.threads = env_threads();
  std::vector<ShootingSolution> sols = solve(prob, config);

  json cfg{{"space", space_s}, {"n", n},        {"p", vec_to_json(p)}, {"q", vec_to_json(q)},
           {"T", t_horizon},   {"starts", starts}, {"seed", seed},     {"out", out_path}};
  json doc = header("shoot", cfg);
  doc["riemannian_distance"] = std::acos(std::clamp(p.dot(q), -1.0, 1.0));
  json arr = json::array();
  for (const auto& s : sols) {
    arr.push_back(json{{"v", vec_to_json(s.spec.v)},
                       {"moments", s.spec.moments},
                       {"residual", s.residual},
                       {"length", s.length}});
  }
  doc["solutions"] = std::move(arr);
  doc["solution_count"] = sols.size();

  OutputTarget target(out_path, fallback);
  target.stream() << doc.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------ htype ---

int run_htype(const std::string& lambda_s, const std::string& u0_s, const std::string& x0_s,
              const std::string& z0_s, double t_horizon, double step, const std::string& out_path,
              const std::string& format, std::ostream& fallback) {
  Eigen::VectorXd lambda = parse_vector(lambda_s);
  Eigen::VectorXd u0 = parse_vector(u0_s);
  if (lambda.size() != 3 || u0.size() != 4)
    throw std::invalid_argument("htype: --lambda needs 3 entries, --u0 needs 4");
  HTypeState s0;
  s0.lambda = lambda;
  s0.u = u0;
  if (!x0_s.empty()) {
    Eigen::VectorXd x0 = parse_vector(x0_s);
    if (x0.size() != 4) throw std::invalid_argument("htype: --x0 needs 4 entries");
    s0.point.x = x0;
  }
  if (!z0_s.empty()) {
    Eigen::VectorXd z0 = parse_vector(z0_s);
    if (z0.size() != 3) throw std::invalid_argument("htype: --z0 needs 3 entries");
    s0.point.z = z0;
  }

  HTypeTrajectory traj = integrate_geodesic(s0, t_horizon, step);

  json cfg{{"lambda", lambda_s}, {"u0", u0_s},   {"x0", x0_s},       {"z0", z0_s},
           {"T", t_horizon},     {"step", step}, {"format", format}, {"out", out_path}};
  OutputTarget target(out_path, fallback);
  std::ostream& os = target.stream();

  if (format == "csv") {
    csv_header(os, "htype", cfg);
    os << "t,x1,x2,x3,x4,zI,zJ,zK,u1,u2,u3,u4,speed\n";
    for (size_t k = 0; k < traj.t.size(); ++k) {
      const auto& s = traj.rk4[k];
      os << fmt17(traj.t[k]);
      for (int i = 0; i < 4; ++i) os << "," << fmt17(s.x[i]);
      for (int i = 0; i < 3; ++i) os << "," << fmt17(s.z[i]);
      for (int i = 0; i < 4; ++i) os << "," << fmt17(s.u[i]);
      os << "," << fmt17(s.u.norm()) << "\n";
    }
    return 0;
  }

  json doc = header("htype", cfg);
  doc["max_discrepancy"] = traj.max_discrepancy;
  json rows = json::array();
  for (size_t k = 0; k < traj.t.size(); ++k) {
    const auto& s = traj.rk4[k];
    rows.push_back(json{{"t", traj.t[k]},
                        {"x", {s.x[0], s.x[1], s.x[2], s.x[3]}},
                        {"z", {s.z[0], s.z[1], s.z[2]}},
                        {"u", {s.u[0], s.u[1], s.u[2], s.u[3]}},
                        {"speed", s.u.norm()}});
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << "\n";
  return 0;
}

// --------------------------------------------------------------- spectrum ---

int run_spectrum(const std::string& space_s, int degree, const std::string& out_path,
                 std::ostream& fallback) {
  SubSpace space;
  if (space_s == "s3") space = SubSpace::S3;
  else if (space_s == "s7") space = SubSpace::S7;
  else throw std::invalid_argument("spectrum: --space must be s3 or s7");

  OperatorMatrix om = operator_matrix(build_sublaplacian(space), degree);
  json cfg{{"space", space_s}, {"degree", degree}, {"out", out_path}};
  json doc = header("spectrum", cfg);
  doc["operator"] = "sublaplacian";
  doc["basis_dim"] = om.basis.dim();
  json blocks = json::array();
  for (int k = 0; k <= degree; ++k) {
    blocks.push_back(json{{"degree", k},
                          {"dimension", om.basis.degree_size(k)},
                          {"eigenvalues", degree_block_eigenvalues(om, k)}});
  }
  doc["blocks"] = std::move(blocks);
  OutputTarget target(out_path, fallback);
  target.stream() << doc.dump(2) << "\n";
  return 0;
}

// ------------------------------------------------------------------- heat ---

int run_heat(double t, int degree, const std::string& out_path, std::ostream& fallback) {
  HeatReport rep = heat_factorization(t, degree);
  json cfg{{"t", t}, {"degree", degree}, {"out", out_path}};
  json doc = header("heat", cfg);
  doc["sum_exact"] = rep.sum_exact;
  doc["degree_blocks_scalar"] = rep.degree_blocks_scalar;
  doc["split_error"] = rep.split_error;
  doc["full_vs_split_error"] = rep.full_vs_split_error;
  doc["lb_eigenvalues"] = rep.lb_eigenvalues;
  OutputTarget target(out_path, fallback);
  target.stream() << doc.dump(2) << "\n";
  return 0;
}

// ----------------------------------------------------------------- verify ---

int run_verify_cmd(const std::string& module, int degree, const std::string& out_path,
                   const std::string& format, std::ostream& fallback, std::ostream& err) {
  std::vector<CheckResult> checks = run_verify(module, degree);
  int failed = 0;
  for (const auto& c : checks)
    if (!c.pass) ++failed;

  json cfg{{"module", module}, {"degree", degree}, {"format", format}, {"out", out_path}};
  OutputTarget target(out_path, fallback);
  std::ostream& os = target.stream();

  if (format == "json") {
    json doc = header("verify", cfg);
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back(json{{"id", c.id},
                         {"label", c.label},
                         {"exact", c.exact},
                         {"status", c.pass ? (c.exact ? "exact-pass" : "pass") : "fail"},
                         {"error", c.error},
                         {"detail", c.detail}});
    }
    doc["checks"] = std::move(arr);
    doc["passed"] = static_cast<int>(checks.size()) - failed;
    doc["failed"] = failed;
    os << doc.dump(2) << "\n";
  } else {
    os << kToolName << " " << kVersion << "  verify  module=" << module << " degree=" << degree
       << "\n";
    for (const auto& c : checks) {
      const std::string status = c.pass ? (c.exact ? "exact-pass" : "pass") : "FAIL";
      os << "  [" << status << "] " << c.id << ": " << c.label;
      if (!c.exact) os << "  (max error " << c.error << ")";
      if (!c.detail.empty()) os << "  -- " << c.detail;
      os << "\n";
    }
    os << (failed == 0 ? "all checks passed" : "FAILURES: " + std::to_string(failed)) << "\n";
  }

  if (failed > 0) {
    for (const auto& c : checks)
      if (!c.pass) err << "verification failed: " << c.id << ": " << c.label << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string(kToolName) + " " + kVersion +
               " -- sub-Riemannian geometry of odd spheres and the quaternionic H-type group"};
  app.require_subcommand(1);

  // trace
  auto* trace = app.add_subcommand("trace", "sample a closed-form geodesic with diagnostics");
  std::string tr_space = "s2n1", tr_p, tr_v, tr_out = "-", tr_format = "csv";
  int tr_n = 1, tr_samples = 100;
  double tr_t0 = 0, tr_t1 = 1;
  trace->add_option("--space", tr_space, "s2n1 or s4n3");
  trace->add_option("--n", tr_n, "sphere index");
  trace->add_option("--p", tr_p, "base point, comma separated (a/b accepted)")->required();
  trace->add_option("--v", tr_v, "initial velocity")->required();
  trace->add_option("--t0", tr_t0);
  trace->add_option("--t1", tr_t1);
  trace->add_option("--samples", tr_samples);
  trace->add_option("--out", tr_out, "output path, - for stdout");
  trace->add_option("--format", tr_format)->check(CLI::IsMember({"csv", "json"}));

  // shoot
  auto* shoot = app.add_subcommand("shoot", "two-point boundary value solve");
  std::string sh_space = "s2n1", sh_p, sh_q, sh_out = "-";
  int sh_n = 1, sh_starts = 64;
  double sh_T = 1;
  uint64_t sh_seed = 0;
  shoot->add_option("--space", sh_space);
  shoot->add_option("--n", sh_n);
  shoot->add_option("--p", sh_p)->required();
  shoot->add_option("--q", sh_q)->required();
  shoot->add_option("--T", sh_T)->required();
  shoot->add_option("--starts", sh_starts);
  shoot->add_option("--seed", sh_seed);
  shoot->add_option("--out", sh_out);

  // htype
  auto* ht = app.add_subcommand("htype", "H-type geodesic integration, RK4 vs closed form");
  std::string ht_lambda, ht_u0, ht_x0, ht_z0, ht_out = "-", ht_format = "csv";
  double ht_T = 10, ht_step = 1e-3;
  ht->add_option("--lambda", ht_lambda, "lI,lJ,lK")->required();
  ht->add_option("--u0", ht_u0, "frame velocity coefficients")->required();
  ht->add_option("--x0", ht_x0);
  ht->add_option("--z0", ht_z0);
  ht->add_option("--T", ht_T);
  ht->add_option("--step", ht_step);
  ht->add_option("--out", ht_out);
  ht->add_option("--format", ht_format)->check(CLI::IsMember({"csv", "json"}));

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "sub-Laplacian eigenvalues per degree block");
  std::string sp_space = "s7", sp_out = "-";
  int sp_degree = 2;
  sp->add_option("--space", sp_space);
  sp->add_option("--degree", sp_degree);
  sp->add_option("--out", sp_out);

  // heat
  auto* he = app.add_subcommand("heat", "heat-operator factorization report");
  double he_t = 0.5;
  int he_degree = 3;
  std::string he_out = "-";
  he->add_option("--t", he_t);
  he->add_option("--degree", he_degree);
  he->add_option("--out", he_out);

  // verify
  auto* ve = app.add_subcommand("verify", "run the identity certificates");
  std::string ve_module = "all", ve_out = "-", ve_format = "text";
  int ve_degree = 2;
  ve->add_option("--module", ve_module, "frames, htype, subelliptic, geodesics, or all");
  ve->add_option("--degree", ve_degree, "quotient degree for the exact certificates");
  ve->add_option("--out", ve_out);
  ve->add_option("--format", ve_format)->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv;
  argv.push_back(kToolName);
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*trace)
      return run_trace(tr_space, tr_n, tr_p, tr_v, tr_t0, tr_t1, tr_samples, tr_out, tr_format, out);
    if (*shoot) return run_shoot(sh_space, sh_n, sh_p, sh_q, sh_T, sh_starts, sh_seed, sh_out, out);
    if (*ht) return run_htype(ht_lambda, ht_u0, ht_x0, ht_z0, ht_T, ht_step, ht_out, ht_format, out);
    if (*sp) return run_spectrum(sp_space, sp_degree, sp_out, out);
    if (*he) return run_heat(he_t, he_degree, he_out, out);
    if (*ve) return run_verify_cmd(ve_module, ve_degree, ve_out, ve_format, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace srsphere
