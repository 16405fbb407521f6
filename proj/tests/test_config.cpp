#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "lgm/config.hpp"
#include "lgm/io.hpp"

using namespace lgm;

TEST_CASE("defaults validate") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  CHECK(default_h(2) == std::vector<double>{1, 0, -1});
  CHECK(default_h(3) == std::vector<double>{3, 1, -1, -3});
}

TEST_CASE("non-regular H names the root pair") {
  RunConfig c;
  c.set("H", "1,1,-2");
  try {
    c.validate();
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("alpha_12") != std::string::npos);
  }
}

TEST_CASE("bad configurations") {
  RunConfig c;
  CHECK_THROWS_AS(c.set("tol.nonsense", "1"), ConfigError);
  CHECK_THROWS_AS(c.set("frobnicate", "1"), ConfigError);
  CHECK_THROWS_AS(c.set("n", "two"), ConfigError);
  RunConfig d;
  d.set("H", "1,0,-2");
  CHECK_THROWS_AS(d.validate(), ConfigError);
  RunConfig e;
  e.set("H", "-1,0,1");
  CHECK_THROWS_AS(e.validate(), ConfigError);
  RunConfig f;
  f.set("j", "7");
  CHECK_THROWS_AS(f.validate(), ConfigError);
}

TEST_CASE("text and json config") {
  RunConfig c;
  apply_config_text(c, "# comment\nn = 4\nc-offset=0.25\ntol.flow=1e-7\nsign=+\n");
  CHECK(c.n == 4);
  CHECK(c.c_offset == 0.25);
  CHECK(c.tolerance("flow") == 1e-7);
  CHECK(c.sign == Sign::Plus);
  apply_config_json(c, R"({"H": [2, 1, 0, -1, -2], "seed": 9, "tol": {"algebraic": 1e-11}})");
  CHECK(c.h == std::vector<double>{2, 1, 0, -1, -2});
  CHECK(c.seed == 9);
  CHECK(c.tolerance("algebraic") == 1e-11);
  CHECK_NOTHROW(c.validate());
  CHECK_THROWS_AS(apply_config_text(c, "no equals sign"), ConfigError);
  CHECK_THROWS_AS(apply_config_json(c, "[1,2]"), ConfigError);
}

TEST_CASE("float formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(18.0) == "18");
  CHECK(format_double(std::nan("")) == "null");
  Json j;
  j["a"] = 1.0 / 3.0;
  j["b"] = std::vector<double>{1, 2};
  const std::string s = dump_json(j);
  CHECK(s.find("0.33333333333333331") != std::string::npos);
  CHECK(nlohmann::json::parse(s)["b"][1] == 2);
}

TEST_CASE("orbit point serialization") {
  const Json j = to_json(critical_point(1, 0));
  const std::string s = dump_json(j);
  const bool has = s.find("[1, 0]") != std::string::npos || s.find("[1,0]") != std::string::npos;
  CHECK(has);
}

TEST_CASE("hessian csv") {
  const CartanVector h = CartanVector::real({1, 0, -1});
  HessianReport r = hessian_restricted(h, 0, m_j_pm(2, 0, Sign::Plus));
  r.sign = Sign::Plus;
  std::ostringstream os;
  write_hessian_csv_header(os);
  write_hessian_csv(os, r);
  const std::string s = os.str();
  CHECK(s.rfind("j,sign,k,alpha_wh0,alpha_h,eps_k_eps_j,value_re,value_im,definiteness", 0) == 0);
  CHECK(s.find("positive") != std::string::npos);
}
