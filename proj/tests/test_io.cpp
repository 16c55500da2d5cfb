#include <doctest.h>

#include <cmath>
#include <sstream>

#include "zeroroot/io.hpp"

using namespace zeroroot;

TEST_CASE("config parsing") {
  std::istringstream in("# chain\ntwo_n = 8\na_bar=0.66\np=1.2\nq=0.1\nxi=1.2\ntheta_bar=0.1,-0.2,0.3,0,0,0,0,0.7\ntol=1e-9\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.params.two_n == 8);
  CHECK(cfg.params.a_bar == 0.66);
  CHECK(cfg.params.q == 0.1);
  CHECK(cfg.params.theta_bar.size() == 8);
  CHECK(cfg.params.theta_bar[1] == -0.2);
  CHECK(cfg.extras.at("tol") == "1e-9");
}

TEST_CASE("config errors name the key") {
  std::istringstream bad("p=abc\n");
  try {
    parse_config(bad);
    CHECK(false);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("'p'") != std::string::npos);
  }
  std::istringstream noeq("two_n 8\n");
  CHECK_THROWS_AS(parse_config(noeq), ConfigError);
}

TEST_CASE("config round trip is exact") {
  ModelParams p;
  p.two_n = 6;
  p.a_bar = 0.1 + 0.2;
  p.p = 1.0 / 3.0;
  p.q = -2.7182818284590451;
  p.xi = 1e-17;
  p.theta_bar = {0.1, -0.1, 1.0 / 7.0, 0, 5e-324, 3};
  std::istringstream in(format_config(p));
  const auto back = parse_config(in).params;
  CHECK(back.a_bar == p.a_bar);
  CHECK(back.p == p.p);
  CHECK(back.q == p.q);
  CHECK(back.xi == p.xi);
  CHECK(back.theta_bar == p.theta_bar);
  CHECK(format_config(back) == format_config(p));
}

TEST_CASE("csv numbers use 17 digits") {
  CHECK(csv_number(0.1) == "0.10000000000000001");
  CHECK(csv_number(-2.0) == "-2");
  CHECK(std::stod(csv_number(1.0 / 3.0)) == 1.0 / 3.0);
  CsvTable t;
  t.header = {"x", "y"};
  t.add({"1", "2"});
  CHECK(t.str() == "x,y\n1,2\n");
}

TEST_CASE("zero root set json") {
  ZeroRootSet r;
  r.two_n = 4;
  r.params.two_n = 4;
  r.params.a_bar = 0.3;
  r.z = {cplx(0.1, 0.2), cplx(0, 1.5)};
  r.residual = 1e-12;
  const auto j = roots_to_json(r);
  CHECK(j.at("roots").at(1).at(1).get<double>() == 1.5);
  CHECK(j.contains("two_n"));
  CHECK(j.contains("params"));
  CHECK(j.contains("residual"));
  const auto back = roots_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.z == r.z);
  CHECK(back.params.a_bar == 0.3);
  CHECK(back.residual == r.residual);
}
