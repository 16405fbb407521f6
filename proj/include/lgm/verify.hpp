#pragma once

#include <string>
#include <vector>

#include "lgm/config.hpp"
#include "lgm/io.hpp"
#include "lgm/thimble.hpp"

namespace lgm {

enum class Status { Pass, Fail, Warn };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  double value = 0.0;
  double tolerance = 0.0;
  std::string comparison = "<=";  // how value relates to tolerance when passing
  std::string statement;
  Json detail = Json::object();
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
};

struct VerificationReport {
  Json config;
  std::vector<Suite> suites;  // sorted by name
  Json diagnostics = Json::object();
  bool passed() const;
  int count(Status s) const;
  Json to_json() const;
};

struct VerifyContext {
  RunConfig cfg;
  CartanVector h;
  std::vector<int> slots;      // critical slots with admissible graphs
  std::vector<Thimble> thimbles;
  explicit VerifyContext(const RunConfig& c);
};

Suite verify_lie(const VerifyContext& ctx);
Suite verify_orbit(const VerifyContext& ctx);
Suite verify_flow(const VerifyContext& ctx);
Suite verify_cycles(const VerifyContext& ctx);
Suite verify_graphs(const VerifyContext& ctx);
Suite verify_thimble(const VerifyContext& ctx);
Json verify_diagnostics(const VerifyContext& ctx);

VerificationReport run_verify(const RunConfig& cfg);

}  // namespace lgm
