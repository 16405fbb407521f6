// lgm_cli: verify | spectrum | flow | thimble
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "lgm/config.hpp"
#include "lgm/flow.hpp"
#include "lgm/io.hpp"
#include "lgm/random.hpp"
#include "lgm/tangent.hpp"
#include "lgm/thimble.hpp"
#include "lgm/verify.hpp"

using namespace lgm;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out, const Json& j) {
  if (out.empty()) {
    write_json(std::cout, j);
    std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot write " + out);
  write_json(f, j);
  f << '\n';
}

int cmd_verify(const RunConfig& cfg) {
  const VerificationReport rep = run_verify(cfg);
  emit(cfg.out, rep.to_json());
  for (const auto& s : rep.suites)
    for (const auto& c : s.checks)
      std::cerr << s.name << '/' << c.name << ": " << to_string(c.status) << " (" << format_double(c.value) << ' '
                << c.comparison << ' ' << format_double(c.tolerance) << ")\n";
  std::cerr << "pass " << rep.count(Status::Pass) << ", fail " << rep.count(Status::Fail) << ", warn "
            << rep.count(Status::Warn) << '\n';
  return rep.passed() ? 0 : 1;
}

int cmd_spectrum(const RunConfig& cfg) {
  const CartanVector h = cfg.cartan();
  const int n = cfg.n;
  Json j;
  j["n"] = n;
  j["H"] = to_json(h);
  Json crit = Json::array();
  for (int s = 0; s <= n; ++s) {
    const OrbitPoint c = critical_point(n, s);
    Json e;
    e["j"] = s + 1;
    e["value"] = potential(h, c).real();
    e["spectrum"] = to_json(linearize(c, h));
    crit.push_back(e);
  }
  j["critical_points"] = crit;
  Json hs = Json::array();
  std::vector<HessianReport> reps;
  for (int s = 0; s <= n; ++s) {
    if (n % 2 == 1 && s != 0 && s != n) continue;
    for (Sign sg : {Sign::Minus, Sign::Plus}) {
      HessianReport r = hessian_restricted(h, s, m_j_pm(n, s, sg));
      r.sign = sg;
      hs.push_back(to_json(r));
      reps.push_back(r);
    }
  }
  j["hessians"] = hs;
  emit(cfg.out, j);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out + ".hessian.csv");
    write_hessian_csv_header(f);
    for (const auto& r : reps) write_hessian_csv(f, r);
  }
  return 0;
}

int cmd_flow(const RunConfig& cfg, const std::string& start) {
  const CartanVector h = cfg.cartan();
  const int n = cfg.n;
  Rng rng = make_rng(cfg.seed, 0);
  const int j = cfg.j - 1;
  const OrbitPoint c = critical_point(n, j);
  OrbitPoint x0 = c;
  if (start == "stable") {
    const auto basis = linearize(c, h).stable_basis();
    Mat d = Mat::Zero(n + 1, n + 1);
    std::normal_distribution<double> nd;
    for (const auto& b : basis) d += nd(rng) * b;
    if (b_norm(d) > 0) x0 = retract(Mat(c.matrix() + 1e-2 / b_norm(d) * d));
  } else if (start == "random") {
    x0 = random_orbit_point(n, rng);
  } else if (start != "critical") {
    throw ConfigError("start must be stable, random or critical");
  }
  FlowOptions o;
  o.step = cfg.step_size;
  o.max_steps = cfg.steps;
  o.conv_tol = cfg.tolerance("convergence");
  o.throw_on_drift = false;
  const Trajectory tr = integrate(x0, h, o);
  if (cfg.out.empty()) {
    write_trajectory_csv(std::cout, tr);
  } else {
    std::ofstream f(cfg.out);
    write_trajectory_csv(f, tr);
  }
  std::cerr << "steps " << tr.points.size() - 1 << ", converged " << (tr.converged ? "yes" : "no");
  if (tr.limit) std::cerr << ", limit j=" << *tr.limit + 1;
  if (tr.escaped) std::cerr << ", escaped (retraction drift above 0.5)";
  double closest = 1e300;
  int near = 0;
  for (const auto& p : tr.points)
    for (int s = 0; s <= n; ++s) {
      const double d = b_norm(p.matrix() - critical_point(n, s).matrix());
      if (d < closest) {
        closest = d;
        near = s;
      }
    }
  std::cerr << ", closest approach " << format_double(closest) << " to j=" << near + 1;
  std::cerr << '\n';
  return 0;
}

int cmd_thimble(const RunConfig& cfg) {
  const CartanVector h = cfg.cartan();
  ThimbleOptions opt;
  opt.c_offset = cfg.c_offset;
  opt.directions = cfg.directions;
  opt.seed = cfg.seed;
  opt.integrity_tol = cfg.tolerance("integrity");
  if (cfg.step_size > 0) opt.step = cfg.step_size;
  const Thimble th = trace_thimble(cfg.j - 1, cfg.sign, h, opt);
  const LagrangianCheck lc = lagrangian_check(th.samples, opt.step);
  double res = 0.0, drift = 0.0, lo = 1e300, hi = -1e300;
  for (const auto& s : th.samples) {
    res = std::max(res, s.graph_residual);
    drift = std::max(drift, std::abs(s.f2 - th.f2_critical));
    lo = std::min(lo, s.f1);
    hi = std::max(hi, s.f1);
  }
  Json j = to_json(th);
  j["summary"] = {{"max_graph_residual", res}, {"max_f2_drift", drift}, {"max_omega", lc.max_omega},
                  {"f1_min", lo}, {"f1_max", hi}, {"samples", th.samples.size()}};
  emit(cfg.out, j);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out + ".csv");
    write_thimble_csv(f, th);
  }
  std::cout << "thimble j=" << cfg.j << " sign=" << to_string(cfg.sign) << " samples=" << th.samples.size()
            << " max_graph_residual=" << format_double(res) << " max_f2_drift=" << format_double(drift)
            << " max_omega=" << format_double(lc.max_omega) << " f1_range=[" << format_double(lo) << ", "
            << format_double(hi) << "]\n";
  const bool ok = res < cfg.tolerance("graph_membership") && drift < cfg.tolerance("f2_drift") &&
                  lc.max_omega < cfg.tolerance("lagrangian_fd");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  // --tol.KEY=VAL is pulled out before CLI11 sees the arguments
  std::vector<std::pair<std::string, std::string>> tol_flags;
  std::vector<std::string> rest;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.rfind("--tol.", 0) == 0) {
      const auto eq = a.find('=');
      if (eq != std::string::npos) {
        tol_flags.emplace_back(a.substr(2, eq - 2), a.substr(eq + 1));
      } else if (i + 1 < argc) {
        tol_flags.emplace_back(a.substr(2), argv[++i]);
      } else {
        std::cerr << "config error: missing value for " << a << '\n';
        return 2;
      }
    } else {
      rest.push_back(a);
    }
  }

  CLI::App app{"adjoint orbit Lefschetz fibration toolkit"};
  app.require_subcommand(1);
  std::vector<std::pair<std::string, std::string>> flags;
  std::string config_file, config_json, start = "stable";
  const std::vector<std::string> keys = {"n", "H", "j", "sign", "c-offset", "steps",
                                         "step-size", "directions", "seed", "out"};
  std::vector<std::string> values(keys.size());
  std::vector<CLI::Option*> opts;
  for (size_t k = 0; k < keys.size(); ++k) opts.push_back(app.add_option("--" + keys[k], values[k]));
  app.add_option("--config", config_file, "key=value config file");
  app.add_option("--config-json", config_json, "JSON config file");
  app.fallthrough();
  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  auto* spectrum = app.add_subcommand("spectrum", "linearization spectra and restricted Hessians");
  auto* flow = app.add_subcommand("flow", "integrate the Z flow");
  flow->add_option("--start", start, "stable | random | critical");
  auto* thimble = app.add_subcommand("thimble", "trace a real Lagrangian thimble");

  std::vector<std::string> rev(rest.rbegin(), rest.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  RunConfig cfg;
  try {
    if (!config_file.empty()) apply_config_text(cfg, slurp(config_file));
    if (!config_json.empty()) apply_config_json(cfg, slurp(config_json));
    for (size_t k = 0; k < keys.size(); ++k)
      if (opts[k]->count()) cfg.set(keys[k], values[k]);
    for (const auto& [k, v] : tol_flags) cfg.set(k, v);
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg);
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (flow->parsed()) return cmd_flow(cfg, start);
    if (thimble->parsed()) return cmd_thimble(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
