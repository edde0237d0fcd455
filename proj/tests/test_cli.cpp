#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MFCKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& f) { return std::string(MFCKIT_TEST_DATA) + "/" + f; }

}  // namespace

TEST_CASE("validate bundled files") {
  for (const char* f : {"ising.json", "trivial.json"}) {
    Run r = run("validate " + data(f));
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["pentagon"]["residual"].get<double>() < 1e-12);
  }
}

TEST_CASE("validate rejects a corrupted file and names the pentagon tuple") {
  std::ifstream in(data("ising.json"));
  auto j = json::parse(in);
  for (auto& e : j["F"])
    if (e[0] == 1 && e[1] == 2 && e[2] == 1 && e[3] == 2) e[6] = -e[6].get<double>();
  auto path = std::filesystem::temp_directory_path() / "mfckit_corrupt_ising.json";
  std::ofstream(path) << j.dump();
  Run r = run("validate " + path.string());
  CHECK(r.status == 1);
  auto out = json::parse(r.out);
  CHECK(out["passed"] == false);
  CHECK(out["error"].get<std::string>().find("pentagon") != std::string::npos);
  CHECK(out["pentagon"]["where"].size() == 9);
  std::filesystem::remove(path);
}

TEST_CASE("rep reports") {
  Run a = run("rep " + data("su2_4.json") + " --genus 1 --doubled");
  REQUIRE(a.status == 0);
  CHECK(json::parse(a.out)["genera"][0]["fixed_space_dim"] == 2);

  Run b = run("rep " + data("ising.json") + " --genus 2");
  REQUIRE(b.status == 0);
  auto jb = json::parse(b.out)["genera"][0];
  CHECK(jb["dim"] == 10);
  CHECK(jb["commutant_dim"] == 1);
  CHECK(jb["irreducible"] == true);

  Run c = run("rep " + data("trivial.json") + " --genus 3");
  REQUIRE(c.status == 0);
  auto jc = json::parse(c.out)["genera"][0];
  CHECK(jc["dim"] == 1);
  CHECK(jc["commutant_dim"] == 1);

  Run d = run("rep ising --genus 1-2");
  REQUIRE(d.status == 0);
  CHECK(json::parse(d.out)["genera"].size() == 2);
}

TEST_CASE("correlator of Z(1)") {
  Run a = run("correlator " + data("ising.json") + " --zunit --genus 0");
  REQUIRE(a.status == 0);
  auto v = json::parse(a.out)["genera"][0]["value"];
  CHECK(v[0].get<double>() == doctest::Approx(4.0));
  CHECK(std::abs(v[1].get<double>()) < 1e-12);

  Run b = run("correlator " + data("ising.json") + " --zunit --genus 1");
  REQUIRE(b.status == 0);
  CHECK(json::parse(b.out)["genera"][0]["invariance_residual"].get<double>() < 1e-8);

  Run c = run("correlator trivial --zunit --genus 2");
  REQUIRE(c.status == 0);
  CHECK(json::parse(c.out)["genera"][0]["invariance_residual"].get<double>() == 0);
}

TEST_CASE("classify exit codes") {
  Run a = run("classify " + data("ising.json"));
  CHECK(a.status == 0);

  Run b = run("classify " + data("ising.json") + " --selftest-twist --seed 7");
  CHECK(b.status == 0);
  CHECK(json::parse(b.out)["isomorphism_residual"].get<double>() < 1e-8);

  Run c = run("classify " + data("su2_4.json"));
  auto jc = json::parse(c.out);
  CHECK(jc["hypothesis_holds_on_checked_genera"] == false);
  CHECK(jc["irreducibility_audit"][0]["commutant"] == 2);

  Run d = run("classify ising --algebra " + data("algebras/ising_one_plus_psi.json"));
  CHECK(d.status == 0);

  Run e = run("classify " + data("no_such_file.json"));
  CHECK(e.status == 1);
}

TEST_CASE("reports are deterministic") {
  Run a = run("classify ising --selftest-twist --seed 3");
  Run b = run("classify ising --selftest-twist --seed 3");
  CHECK(a.out == b.out);
  Run c = run("rep fibonacci --genus 2");
  Run d = run("rep fibonacci --genus 2");
  CHECK(c.out == d.out);
}

TEST_CASE("grading report") {
  Run a = run("grading ising");
  REQUIRE(a.status == 0);
  auto j = json::parse(a.out);
  CHECK(j["N"] == 1);
}
