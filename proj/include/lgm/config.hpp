#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgm/graphs.hpp"

namespace lgm {

std::map<std::string, double> default_tolerances();

struct RunConfig {
  int n = 2;
  std::vector<double> h;  // empty: default for n
  int j = 1;              // 1-based
  Sign sign = Sign::Minus;
  double c_offset = 0.5;
  int steps = 10000;
  double step_size = 0.0;  // 0: module default
  int directions = 64;
  std::uint64_t seed = 1;
  std::string out;
  std::map<std::string, double> tol = default_tolerances();

  // throws ConfigError
  void validate() const;
  CartanVector cartan() const;
  double tolerance(const std::string& key) const;
  // key=value assignment; unknown keys throw ConfigError
  void set(const std::string& key, const std::string& value);
};

// evenly spaced, strictly decreasing, zero sum
std::vector<double> default_h(int n);

// flat key=value text, '#' comments
void apply_config_text(RunConfig& cfg, const std::string& text);
void apply_config_json(RunConfig& cfg, const std::string& text);

}  // namespace lgm
