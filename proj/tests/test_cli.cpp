#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "reference_values.hpp"

namespace {

struct run_result {
  int code = -1;
  std::string out;
};

run_result run_cmd(const std::string& cmd) {
  run_result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

// stdout only; stderr dropped
run_result kg(const std::string& args) {
  return run_cmd(std::string(KGWAVE_BIN) + " " + args + " 2>/dev/null");
}

// stderr only; stdout dropped
run_result kg_err(const std::string& args) {
  return run_cmd(std::string(KGWAVE_BIN) + " " + args + " 2>&1 1>/dev/null");
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string quartic_file() {
  static std::string path = [] {
    std::string p = "kgw_test_quartic.json";
    std::ofstream f(p);
    f << R"({"name": "quartic", "kind": "poly", "poly": [0.0, 0.0, 0.5, 0.0, -0.25]})";
    return p;
  }();
  return path;
}

const char* sqrt2_str = "1.4142135623730951";

}  // namespace

TEST_CASE("report emits the full diagnostic document") {
  using namespace kgw::testref;
  auto r = kg(std::string("report --potential sine-gordon --E 0 --c ") + sqrt2_str);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["wave"]["region"] == "SuperluminalLibrational");
  CHECK(std::abs(j["wave"]["T"].get<double>() - sg_suplib_period) < 1e-9);
  CHECK(std::abs(j["wave"]["v0"].get<double>() - sg_suplib_v0) < 1e-12);
  CHECK(j["indices"]["gamma"] == 1);
  CHECK(j["indices"]["rho"] == -1);
  CHECK(j["whitham"]["kind"] == "Elliptic");
  CHECK(j["residuals"]["abel"].get<double>() < 1e-8);
  CHECK(j["residuals"]["action_routes"].get<double>() < 1e-8);
  CHECK(j["spectral_bound"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("report accepts a potential file") {
  using namespace kgw::testref;
  auto r = kg("report --potential " + quartic_file() + " --E 0.1 --c 2");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["wave"]["T"].get<double>() - quartic_period) < 1e-9);
  CHECK(j["indices"]["rho"] == -1);
}

TEST_CASE("domain failures exit 2 with a structured error on stderr") {
  auto sep = kg_err(std::string("report --potential sine-gordon --E 1 --c ") + sqrt2_str);
  CHECK(sep.code == 2);
  auto j1 = nlohmann::json::parse(sep.out);
  CHECK(j1["schema"] == 1);
  CHECK(j1["error"]["code"] == "OnSeparatrix");
  CHECK(j1["error"]["what"].is_string());

  auto sonic = kg_err("report --potential sine-gordon --E 0 --c 1");
  CHECK(sonic.code == 2);
  CHECK(nlohmann::json::parse(sonic.out)["error"]["code"] == "SonicSpeed");

  auto missing = kg_err("report --potential ./no-such-file.json --E 0 --c 2");
  CHECK(missing.code == 2);
  CHECK(nlohmann::json::parse(missing.out)["error"]["code"] == "BadConfig");

  auto outside = kg_err("report --potential sine-gordon --E 9 --c 0.5");
  CHECK(outside.code == 2);
  CHECK(nlohmann::json::parse(outside.out)["error"]["code"] == "OutsideRegion");

  // stdout carries nothing on failure
  auto none = kg(std::string("report --potential sine-gordon --E 1 --c ") + sqrt2_str);
  CHECK(none.out.empty());
}

TEST_CASE("argument errors are rejected") {
  CHECK(kg("nonsense-subcommand").code != 0);
  CHECK(kg("report --potential sine-gordon").code != 0);  // missing --E/--c
}

TEST_CASE("profile rows sample the wave profile") {
  auto r = kg(std::string("profile --potential sine-gordon --E 0 --c ") +
              sqrt2_str + " --samples 32");
  REQUIRE(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 34);  // header + samples + closing sample
  CHECK(ls[0] == "z,f,f_z,energy_residual");
  CHECK(ls[1].rfind("0,0,1.41421356237309", 0) == 0);
}

TEST_CASE("trace rows are flat for the stable rotational wave") {
  auto r = kg("trace --potential sine-gordon --E -2 --c 0.5 --theta-steps 48");
  REQUIRE(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 1 + 2 * 48);
  CHECK(ls[0] == "theta,re_lambda,im_lambda,branch,abs_evans");
  for (size_t i = 1; i < ls.size(); ++i) {
    std::istringstream row(ls[i]);
    std::string cell;
    std::getline(row, cell, ',');  // theta
    std::getline(row, cell, ',');  // re_lambda
    CHECK(std::abs(std::stod(cell)) < 1e-6);
  }
}

TEST_CASE("band structure document") {
  using namespace kgw::testref;
  auto r = kg(std::string("hill --potential sine-gordon --E 0 --c ") + sqrt2_str);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  for (const char* key : {"window", "disc_at_zero", "bands", "periodic",
                          "antiperiodic", "gaps"})
    CHECK(j.contains(key));
  REQUIRE(j["gaps"].size() == 1);
  CHECK(std::abs(j["gaps"][0][0].get<double>() - sg_suplib_hill_gap_lo) < 1e-6);
  CHECK(std::abs(j["gaps"][0][1].get<double>() - sg_suplib_hill_gap_hi) < 1e-6);
  CHECK(std::abs(j["disc_at_zero"].get<double>() - 2.0) < 1e-8);
}

TEST_CASE("envelope subcommand carries the closed-form product") {
  using namespace kgw::testref;
  auto r = kg("nls --potential sine-gordon --k 1");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["beta_omega_pp"].get<double>() - nls_sg_k_one_beta_omega_pp) < 1e-12);
  CHECK(j["focusing"] == true);
  CHECK(j["comparison"]["agrees"] == true);
}

TEST_CASE("averaged-system subcommand") {
  auto r = kg("whitham --potential sine-gordon --E -2 --c 0.5");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "Hyperbolic");
  CHECK(j["region"] == "SubluminalRotational");
}

TEST_CASE("scan output is deterministic across thread counts") {
  std::string grid =
      "scan --potential sine-gordon --E-min -2.5 --E-max 2.5 --E-steps 6 "
      "--c-min 0.5 --c-max 2 --c-steps 3";
  auto one = kg(grid + " --threads 1");
  auto four = kg(grid + " --threads 4");
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  CHECK(one.out == four.out);

  auto ls = lines_of(one.out);
  REQUIRE(ls.size() == 1 + 18);
  CHECK(ls[0] ==
        "E,c,region,rho,gamma,whitham_kind,v1_re,v1_im,v2_re,v2_im,error");
  // E-major ordering: first three rows share E = -2.5
  CHECK(ls[1].rfind("-2.5,0.5,", 0) == 0);
  CHECK(ls[2].rfind("-2.5,1.25,", 0) == 0);
  CHECK(ls[3].rfind("-2.5,2,", 0) == 0);
}

TEST_CASE("scan marks cells too close to the separatrix") {
  auto r = kg("scan --potential sine-gordon --E-min 0.9995 --E-max 1.0005 "
              "--E-steps 2 --c-min 1.25 --c-max 1.25 --c-steps 1");
  REQUIRE(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[1].find("NearSeparatrix") != std::string::npos);
  CHECK(ls[2].find("NearSeparatrix") != std::string::npos);
}

TEST_CASE("--out writes the same document to a file") {
  std::string path = "kgw_test_out.json";
  auto r = kg("nls --potential sine-gordon --k 1 --out " + path);
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  auto direct = kg("nls --potential sine-gordon --k 1");
  CHECK(ss.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("repeated invocations are byte-identical") {
  std::string cmd = "report --potential sine-gordon --E -2 --c 0.5";
  auto a = kg(cmd);
  auto b = kg(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
