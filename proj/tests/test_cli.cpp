#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sdmaps/cli.hpp"

using namespace sdmaps;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("verify-symbolic") {
  const auto j = run_json({"verify-symbolic"});
  CHECK(j["status"] == "pass");
  CHECK(j["symbolic"]["entries"].size() == 9);
  CHECK(j["symbolic"]["entries"][5]["value"] == "(u^2 + 1)/(u^2 - 2*u + 1)");
  CHECK(j["u_constraint"]["surviving"] == Json::array({"2"}));
  CHECK(run({"verify-symbolic", "--max-n", "1000"}).code == 0);
  CHECK(run({"verify-symbolic", "--max-n", "2"}).code == 1);
}

TEST_CASE("classify") {
  const auto j = run_json({"classify", "--primes", "5"});
  CHECK(j["results"][0]["maps"][0]["k"] == 1);
  CHECK(j["results"][0]["maps"][1]["k"] == 3);
  CHECK(run_json({"classify", "--primes", "3,5,7"})["counts"] == Json::array({1, 2, 1}));
  const auto bad = run({"classify", "--primes", "4"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not prime") != std::string::npos);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({"classify", "--primes", "5", "--max-oracle-tier", "bogus"}).code == 1);
}

TEST_CASE("verify-quad, verify-complex, ap-demo, counterexamples") {
  CHECK(run({"verify-quad", "--d", "2"}).code == 0);
  CHECK(run({"verify-quad", "--d", "4"}).code == 1);
  CHECK(run({"verify-quad", "--grid", "3"}).code == 1);
  CHECK(run({"verify-complex"}).code == 0);
  CHECK(run({"verify-complex", "--tol", "0"}).code == 1);

  const auto ap = run({"--format", "json", "ap-demo", "--a", "1", "--d", "-1/2", "--steps", "2"});
  CHECK(ap.code == 2);
  CHECK(Json::parse(ap.out)["zero_term"] == 2);
  CHECK(ap.out.find("ZeroTermEncountered") != std::string::npos);

  const auto ce = run({"--format", "json", "counterexamples", "--k", "2", "--samples", "200"});
  CHECK(ce.code == 0);
  CHECK(ce.out.find("x not in image of f_2") != std::string::npos);
  const auto ctrl = Json::parse(ce.out)["negative_controls"];
  CHECK(ctrl.size() == 3);
  for (const auto& c : ctrl) CHECK(c["rejected"] == true);
  CHECK(ctrl[2]["witness"]["x"] == 2);
  CHECK(ctrl[2]["witness"]["lhs"] == 5);
  CHECK(ctrl[2]["witness"]["rhs"] == 4);
}

TEST_CASE("tolerance is only accepted by verify-complex") {
  CHECK(run({"verify-complex", "--tol", "1e-8", "--samples", "20"}).code == 0);
  CHECK(run({"verify-quad", "--tol", "1e-8"}).code == 1);
  CHECK(run({"classify", "--primes", "3", "--tol", "1e-8"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--format", "yaml", "verify-symbolic"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("same seed gives the same payload apart from stats") {
  for (const std::vector<std::string>& cmd : std::vector<std::vector<std::string>>{
           {"verify-quad", "--grid", "3x3", "--samples", "50"},
           {"counterexamples", "--samples", "30"},
           {"verify-complex", "--samples", "30"}}) {
    auto a = cmd, b = cmd;
    a.insert(a.begin(), {"--seed", "99"});
    b.insert(b.begin(), {"--seed", "99"});
    CHECK(strip_stats(run_json(a)).dump() == strip_stats(run_json(b)).dump());
  }
  const auto x = strip_stats(run_json({"--seed", "1", "verify-complex", "--samples", "30"}));
  const auto y = strip_stats(run_json({"--seed", "2", "verify-complex", "--samples", "30"}));
  CHECK(x.dump() != y.dump());
}

TEST_CASE("strip_stats removes nested stats members") {
  const Json j = {{"a", 1}, {"stats", 2}, {"r", Json::array({{{"stats", 3}, {"b", 4}}})}};
  CHECK(strip_stats(j) == Json({{"a", 1}, {"r", Json::array({{{"b", 4}}})}}));
}

TEST_CASE("config file values apply unless overridden on the command line") {
  const std::string path = "sdmaps_cli_test.cfg";
  {
    std::ofstream f(path);
    f << "seed = 17\nformat = json\nprimes = 3,5\n";
  }
  const auto base = run({"--config", path, "classify"});
  REQUIRE(base.code == 0);
  const auto j = Json::parse(base.out);
  CHECK(j["seed"] == 17);
  CHECK(j["counts"] == Json::array({1, 2}));

  const auto over = run({"--config", path, "--seed", "3", "classify", "--primes", "7"});
  REQUIRE(over.code == 0);
  const auto k = Json::parse(over.out);
  CHECK(k["seed"] == 3);
  CHECK(k["counts"] == Json::array({1}));

  {
    std::ofstream f(path);
    f << "nonsense = 1\n";
  }
  CHECK(run({"--config", path, "classify", "--primes", "3"}).code == 1);
  CHECK(run({"--config", "does-not-exist.cfg", "classify", "--primes", "3"}).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("--json writes the payload to a file") {
  const std::string path = "sdmaps_cli_test.json";
  CHECK(run({"--json", path, "classify", "--primes", "5"}).code == 0);
  std::ifstream f(path);
  const auto j = Json::parse(f);
  CHECK(j["command"] == "classify");
  CHECK(j.contains("stats"));
  std::remove(path.c_str());
}
