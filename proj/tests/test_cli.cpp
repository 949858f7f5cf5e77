#include "besstruve/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using besstruve::run_cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("eval json") {
  const Run r = run({"eval", "s", "--z", "2", "--zeta", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["subject"] == "s");
  CHECK(j["z"] == 2.0);
  CHECK(j["zeta"] == 1.0);
  CHECK(std::abs(j["value"].get<double>() - 0.11723211862393953988) < 1e-10);
  CHECK(j["abs_err_estimate"].get<double>() <= 1e-10);
  CHECK(j["terms_used"].get<int>() > 0);
  // High-order terms at z = 2 fall back to quadrature.
  CHECK(j["path"] == "quadrature");

  const Run d = run({"eval", "dh1z", "--k", "5", "--z", "2"});
  REQUIRE(d.code == 0);
  const auto jd = nlohmann::json::parse(d.out);
  CHECK(jd["k"] == 5);
  CHECK(std::abs(jd["value"].get<double>() + 0.0020093535252292834794) < 1e-12);
}

TEST_CASE("eval csv") {
  const Run r = run({"eval", "dj1z", "--k", "3", "--z", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 2);
  CHECK(l[0] == "subject,k,z,value,err,terms,path");
  CHECK(l[1].rfind("dj1z,3,2,0.07970957720201", 0) == 0);
  CHECK(l[1].ends_with(",closed_form"));

  const Run c = run({"eval", "c", "--z", "0.25", "--zeta", "1", "--format", "csv"});
  REQUIRE(c.code == 0);
  CHECK(lines(c.out)[0] == "subject,z,zeta,value,err,terms,path");
  CHECK(lines(c.out)[1].ends_with(",taylor"));
}

TEST_CASE("poly output") {
  const Run r = run({"poly", "r1", "--nu", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "r1");
  CHECK(j["nu"] == 3);
  CHECK(j["poly"]["pi_power"] == 0);
  REQUIRE(j["poly"]["terms"].size() == 2);

  const Run p = run({"poly", "p", "--k", "1"});
  REQUIRE(p.code == 0);
  const auto jp = nlohmann::json::parse(p.out);
  CHECK(jp["p1"]["terms"][0]["exp"] == -2);
  CHECK(jp["p1"]["terms"][0]["num"] == "2");
  CHECK(jp["p0"]["terms"][0]["exp"] == -1);

  const Run s = run({"poly", "sigma", "--k", "3"});
  REQUIRE(s.code == 0);
  const auto js = nlohmann::json::parse(s.out);
  CHECK(js["sigma2"]["pi_power"] == -1);
  CHECK(js["sigma2"]["terms"][0]["num"] == "2");

  CHECK(run({"poly", "s_sum", "--nu", "3"}).code == 0);
  CHECK(run({"poly", "r0", "--nu", "4"}).code == 0);
}

TEST_CASE("table order and determinism") {
  const std::vector<std::string> args{"table", "c", "--z-grid", "0.1,1,5", "--zeta-grid", "0,2"};
  const Run a = run(args);
  REQUIRE(a.code == 0);
  const auto l = lines(a.out);
  REQUIRE(l.size() == 7);
  CHECK(l[0] == "z,zeta,value,err,terms,path");
  CHECK(l[1].rfind("0.1,0,", 0) == 0);
  CHECK(l[2].rfind("0.1,2,", 0) == 0);
  CHECK(l[3].rfind("1,0,", 0) == 0);
  CHECK(l[6].rfind("5,2,", 0) == 0);
  for (int i = 0; i < 3; ++i) CHECK(run(args).out == a.out);

  const Run j = run({"table", "s", "--z-grid", "1,2", "--zeta-grid", "1", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto arr = nlohmann::json::parse(j.out);
  REQUIRE(arr.size() == 2);
  CHECK(arr[1]["z"] == 2.0);
  CHECK(std::abs(arr[1]["value"].get<double>() - 0.11723211862393953988) < 1e-10);
}

TEST_CASE("eval output is byte-identical across runs") {
  const std::vector<std::string> args{"eval", "c", "--z", "7", "--zeta", "3"};
  const std::string first = run(args).out;
  for (int i = 0; i < 3; ++i) CHECK(run(args).out == first);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--suite", "lommel"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FLAG lommel") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto l = lines(r.out);
  const auto summary = nlohmann::json::parse(l.back());
  CHECK(summary["suites"][0]["suite"] == "lommel");
  CHECK(summary["suites"][0]["passed"] == true);
  // An impossible integral tolerance makes the grid checks fail.
  CHECK(run({"verify", "--suite", "integrals", "--tol", "1e-30"}).code == 1);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "x", "--z", "1"}).code == 2);
  CHECK(run({"eval", "s", "--z", "1"}).code == 2);
  CHECK(run({"eval", "dj1z", "--z", "1"}).code == 2);
  CHECK(run({"eval", "s", "--z", "51", "--zeta", "1"}).code == 2);
  CHECK(run({"eval", "s", "--z", "abc", "--zeta", "1"}).code == 2);
  CHECK(run({"eval", "s", "--z", "1", "--zeta", "1", "--tol", "0"}).code == 2);
  CHECK(run({"eval", "dj1z", "--k", "121", "--z", "1"}).code == 2);
  CHECK(run({"poly", "r0", "--nu", "1"}).code == 2);
  CHECK(run({"poly", "p"}).code == 2);
  CHECK(run({"table", "s", "--z-grid", "1,,2", "--zeta-grid", "1"}).code == 2);
  CHECK(run({"table", "s", "--z-grid", "1", "--zeta-grid", "1x"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  const Run r = run({"eval", "s", "--z", "51", "--zeta", "1"});
  CHECK(r.out.empty());
  CHECK(!r.err.empty());
}

TEST_CASE("exit code for convergence failure") {
  const Run r = run({"eval", "c", "--z", "1", "--zeta", "45"});
  CHECK(r.code == 3);
  CHECK(r.err.find("convergence") != std::string::npos);
  CHECK(run({"table", "c", "--z-grid", "1", "--zeta-grid", "1,45"}).code == 3);
}
