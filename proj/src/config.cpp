#include "lgm/config.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace lgm {

std::map<std::string, double> default_tolerances() {
  return {
      {"algebraic", tol::kAlgebraic},
      {"collision", 1e-9},
      {"convergence", tol::kConvergence},
      {"f2_drift", 1e-8},
      {"fg", 1e-8},
      {"flow", tol::kFlow},
      {"graph_membership", tol::kGraphMembership},
      {"hessian", 1e-10},
      {"integrity", tol::kIntegrity},
      {"intersection", tol::kIntersection},
      {"isometry", 1e-12},
      {"jacobian", 1e-6},
      {"kernel_cutoff", tol::kKernelCutoff},
      {"lagrangian_fd", 1e-5},
      {"lift", 1e-10},
      {"membership", tol::kMembership},
      {"reality", 1e-9},
      {"reality_flag", 1e-12},
      {"retraction", 1e-8},
      {"sampling_transversality", tol::kSamplingTransversality},
      {"transversality", tol::kTransversality},
  };
}

std::vector<double> default_h(int n) {
  std::vector<double> h(n + 1);
  for (int k = 0; k <= n; ++k) h[k] = (n % 2 == 0) ? 0.5 * (n - 2 * k) : static_cast<double>(n - 2 * k);
  return h;
}

CartanVector RunConfig::cartan() const { return CartanVector::real(h.empty() ? default_h(n) : h); }

double RunConfig::tolerance(const std::string& key) const {
  const auto it = tol.find(key);
  if (it == tol.end()) throw ConfigError("unknown tolerance key: " + key);
  return it->second;
}

void RunConfig::validate() const {
  if (n < 1) throw ConfigError("n must be at least 1");
  const std::vector<double> hv = h.empty() ? default_h(n) : h;
  if (static_cast<int>(hv.size()) != n + 1) throw ConfigError("H must have n+1 entries");
  double sum = 0.0;
  for (double v : hv) sum += v;
  if (std::abs(sum) > 1e-12) throw ConfigError("H entries must sum to zero");
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (std::abs(hv[a] - hv[b]) <= 1e-12) {
        std::ostringstream os;
        os << "H is not regular: alpha_" << a + 1 << b + 1 << "(H) = 0";
        throw ConfigError(os.str());
      }
  for (int k = 0; k < n; ++k)
    if (!(hv[k] > hv[k + 1])) throw ConfigError("H entries must be strictly decreasing");
  if (j < 1 || j > n + 1) throw ConfigError("j must lie in 1..n+1");
  if (!(c_offset > 0)) throw ConfigError("c-offset must be positive");
  if (steps < 1) throw ConfigError("steps must be positive");
  if (step_size < 0) throw ConfigError("step-size must be non-negative");
  if (directions < 1) throw ConfigError("directions must be positive");
  for (const auto& [k, v] : tol)
    if (!(v > 0)) throw ConfigError("tolerance " + k + " must be positive");
}

static double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": " + v);
  }
}

static long to_long(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const long d = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": " + v);
  }
}

static std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void RunConfig::set(const std::string& key_in, const std::string& value_in) {
  std::string key = trim(key_in);
  for (auto& c : key)
    if (c == '-') c = '_';
  const std::string value = trim(value_in);
  if (key.rfind("tol.", 0) == 0) {
    const std::string name = key.substr(4);
    if (!tol.count(name)) throw ConfigError("unknown tolerance key: " + name);
    tol[name] = to_double(key, value);
  } else if (key == "n") {
    n = static_cast<int>(to_long(key, value));
  } else if (key == "H") {
    h.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!trim(item).empty()) h.push_back(to_double(key, trim(item)));
  } else if (key == "j") {
    j = static_cast<int>(to_long(key, value));
  } else if (key == "sign") {
    if (value == "+" || value == "plus") sign = Sign::Plus;
    else if (value == "-" || value == "minus") sign = Sign::Minus;
    else throw ConfigError("sign must be + or -");
  } else if (key == "c_offset") {
    c_offset = to_double(key, value);
  } else if (key == "steps") {
    steps = static_cast<int>(to_long(key, value));
  } else if (key == "step_size") {
    step_size = to_double(key, value);
  } else if (key == "directions") {
    directions = static_cast<int>(to_long(key, value));
  } else if (key == "seed") {
    seed = static_cast<std::uint64_t>(to_long(key, value));
  } else if (key == "out") {
    out = value;
  } else {
    throw ConfigError("unknown configuration key: " + key);
  }
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    cfg.set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_config_json(RunConfig& cfg, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad JSON config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("JSON config must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (it.key() == "tol" && v.is_object()) {
      for (auto t = v.begin(); t != v.end(); ++t) cfg.set("tol." + t.key(), t.value().dump());
      continue;
    }
    std::string s;
    if (v.is_string()) s = v.get<std::string>();
    else if (v.is_array()) {
      for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].dump();
    } else s = v.dump();
    cfg.set(it.key(), s);
  }
}

}  // namespace lgm
