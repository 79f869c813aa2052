#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

#include "gaplab/common.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = gaplab::cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content = "") {
  const auto p = std::filesystem::temp_directory_path() / ("gaplab_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"poly"}).code == 2);                                   // missing --poly
  CHECK(run({"poly", "--poly", "x^2", "--bogus"}).code == 2);
  CHECK(run({"poly", "--poly", "(x+1)^2"}).code == 1);
  CHECK(run({"--threads", "0", "poly", "--poly", "x"}).code == 2);
  CHECK(run({"--guard-scale", "20", "poly", "--poly", "x"}).code == 2);
  CHECK(run({"--guard-scale", "0.05", "poly", "--poly", "x"}).code == 2);
  CHECK(run({"psi", "--x", "10", "--a", "2", "--q", "4"}).code == 0);
  CHECK(run({"roots-mod", "--poly", "x", "--q", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto bad = run({"gap-info", "--steps", "0", "--widths", "3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("documented invocations") {
  const auto a = run({"--json", "intersective-check", "--poly", "x^2+1", "--mode", "integers", "--prime-bound", "100"});
  REQUIRE(a.code == 0);
  const auto j = a.json();
  CHECK(j["schema_version"] == gaplab::cli::kSchemaVersion);
  CHECK(j["command"] == "intersective-check");
  CHECK(j["status"] == "refuted");
  CHECK(j["failing_prime"] == 3);
  CHECK(j["failing_exponent"] == 1);
  const auto text = run({"intersective-check", "--poly", "x^2+1", "--mode", "integers", "--prime-bound", "100"});
  CHECK(text.out.rfind("refuted (3, 1)", 0) == 0);

  const auto b = run({"gap-avoids", "--steps", "11", "--widths", "10", "--poly", "x^2"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("avoids", 0) == 0);
  const auto c = run({"--json", "gap-avoids", "--steps", "1", "--widths", "9"});
  CHECK(c.json()["avoids"] == false);
  CHECK(c.json()["n"] == 1);
}

TEST_CASE("big integers are strings in JSON") {
  const auto r = run({"--json", "poly", "--poly", "123456789012345678901234567890x+1", "--eval", "2"});
  REQUIRE(r.code == 0);
  const auto j = r.json();
  CHECK(j["coefficients"][0] == 1);
  CHECK(j["coefficients"][1] == "123456789012345678901234567890");
  CHECK(j["value"] == "246913578024691357802469135781");
  CHECK(run({"poly", "--poly", "x", "--eval", "abc"}).code == 2);
}

TEST_CASE("negative numbers parse as option values") {
  const auto r = run({"--json", "psi", "--x", "100", "--a", "-1", "--q", "4"});
  REQUIRE(r.code == 0);
  const auto s = run({"--json", "psi", "--x", "100", "--a", "3", "--q", "4"});
  CHECK(r.json()["psi"] == s.json()["psi"]);
  CHECK(run({"--json", "weyl", "--poly", "x^2", "--n", "5", "--t", "-1", "--d", "5"}).code == 0);
}

TEST_CASE("config files supply defaults that flags override") {
  const auto cfg = temp_file("cfg", "# defaults\njson = true\nthreads = 2\n\nseed = 5\n");
  const auto a = run({"--config", cfg.string(), "divisor-moment", "--j", "2", "--M", "10"});
  REQUIRE(a.code == 0);
  CHECK(a.json()["moment"] == 83);
  const auto bad = temp_file("cfg_bad", "this line has no equals sign\n");
  CHECK(run({"--config", bad.string(), "divisor-moment", "--j", "2", "--M", "10"}).code == 2);
  CHECK(run({"--config", "/nonexistent/gaplab.cfg", "poly", "--poly", "x"}).code == 2);
  const auto unknown = temp_file("cfg_unknown", "frobnicate = 3\n");
  CHECK(run({"--config", unknown.string(), "poly", "--poly", "x"}).code == 2);
}

TEST_CASE("guard scale from the environment") {
  const double before = gaplab::guard_scale();
  setenv("GAPLAB_GUARD_SCALE", "30", 1);
  CHECK(run({"poly", "--poly", "x"}).code == 2);
  setenv("GAPLAB_GUARD_SCALE", "2", 1);
  CHECK(run({"poly", "--poly", "x"}).code == 0);
  unsetenv("GAPLAB_GUARD_SCALE");
  CHECK(gaplab::guard_scale() == before);
}

TEST_CASE("search results feed the envelope report") {
  const auto out = temp_file("search.json");
  const auto csv = temp_file("env.csv");
  const auto dat = temp_file("env.dat");
  const auto s = run({"--json", "--seed", "3", "extremal-search", "--N", "1000,10000", "--dims", "2", "--strategy",
                      "hill_climb", "--budget", "1500", "--require-proper", "--prime-major-step", "--out", out.string()});
  REQUIRE(s.code == 0);
  const auto sj = s.json();
  REQUIRE(sj["results"].size() == 2);
  for (const auto& r : sj["results"]) {
    CHECK(r["proper"] == true);
    CHECK(r["size"].get<std::uint64_t>() > 0);
  }
  const auto e = run({"--json", "envelope-report", "--in", out.string(), "--theorem", "t1", "--csv", csv.string(),
                      "--plot-data", dat.string()});
  REQUIRE(e.code == 0);
  CHECK(e.json()["rows"].size() == 2);
  std::ifstream in(dat);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("#", 0) == 0);
  CHECK(run({"envelope-report", "--in", temp_file("empty.json", "{}").string()}).code == 1);
}

TEST_CASE("every subcommand answers in text and JSON") {
  const std::vector<std::vector<std::string>> cmds = {
      {"poly", "--poly", "x^3-19", "--mod", "7"},
      {"intersective-check", "--poly", "x^5+x^4+x^3-19x^2-19x-19", "--mode", "primes", "--witnesses"},
      {"roots-mod", "--poly", "x^2+x+1", "--q", "91", "--method", "lifted"},
      {"gap-avoids", "--steps", "3,7", "--widths", "20,20", "--inputs", "primes"},
      {"gap-info", "--steps", "1,2", "--widths", "2,1"},
      {"detect", "--steps", "3,7", "--widths", "20,20", "--poly", "x^2"},
      {"weyl", "--poly", "x^2", "--n", "100", "--t", "1", "--d", "101", "--bound", "lemma1"},
      {"weyl", "--poly", "x^2", "--n", "50", "--t", "1", "--d", "101", "--inputs", "primes", "--q", "4", "--r", "1"},
      {"weyl-verify", "--box", "20,20,-2,2"},
      {"divisor-moment", "--j", "3", "--M", "1000"},
      {"psi", "--x", "1000", "--q", "10", "--classes"},
      {"linnik-scan", "--qmax", "20"},
      {"extremal-search", "--N", "100,1000"},
      {"exponents", "--poly", "x^2", "--k", "2"},
      {"shape-report", "--lemma", "3", "--count", "3"},
  };
  for (const auto& c : cmds) {
    const auto text = run(c);
    CHECK_MESSAGE(text.code == 0, c[0] << ": " << text.err);
    CHECK_FALSE(text.out.empty());
    auto args = c;
    args.insert(args.begin(), "--json");
    const auto js = run(args);
    REQUIRE_MESSAGE(js.code == 0, c[0] << ": " << js.err);
    const auto j = js.json();
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == c[0]);
  }
}

TEST_CASE("JSON is byte-identical across worker counts") {
  const std::vector<std::vector<std::string>> cmds = {
      {"extremal-search", "--N", "1000,100000", "--dims", "2", "--strategy", "hill_climb", "--budget", "3000",
       "--require-proper", "--prime-major-step"},
      {"intersective-check", "--poly", "x^6-251x^4+6851x^2-48841", "--prime-bound", "3000", "--witnesses"},
      {"weyl-verify", "--box", "40,40,-3,3"},
      {"linnik-scan", "--qmax", "200"},
      {"shape-report", "--lemma", "4", "--count", "3"},
      {"detect", "--steps", "30,77", "--widths", "40,40", "--poly", "x^2", "--inputs", "primes"},
  };
  for (const auto& c : cmds) {
    std::string first;
    for (const char* threads : {"1", "4", "8"}) {
      auto args = c;
      args.insert(args.begin(), {"--json", "--seed", "17", "--threads", threads});
      const auto r = run(args);
      REQUIRE_MESSAGE(r.code == 0, c[0] << ": " << r.err);
      if (first.empty()) first = r.out;
      else CHECK_MESSAGE(r.out == first, c[0] << " differs at --threads " << threads);
    }
  }
}
