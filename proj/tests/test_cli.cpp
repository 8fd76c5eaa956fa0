#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = yh::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(YH_GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("trace examples") {
  CHECK(run({"trace", "--d", "2", "--n", "2", "s1"}).out == "z\n");
  CHECK(run({"trace", "--d", "2", "--n", "1", "f1^1"}).out == "x_1\n");
  CHECK(run({"trace", "--p", "2", "--r", "2", "--n", "1", "f1^3"}).out == "x_3\n");
  const Result tower = run({"trace", "--p", "2", "--R", "2", "--n", "2", "f1^{2^2:1,1}"});
  CHECK(tower.code == yh::cli::kOk);
  CHECK(tower.out == golden("trace_padic_p2.txt"));
}

TEST_CASE("eval examples") {
  CHECK(run({"eval", "--d", "1", "--n", "2", "s1 s1"}).out == golden("eval_hecke_d1.txt"));
  CHECK(run({"eval", "--d", "2", "--n", "2", "s1 s1^-1"}).out == "1\n");
  CHECK(run({"eval", "--d", "2", "--n", "2", "s1 s1"}).out == golden("eval_quadratic_d2.txt"));
  CHECK(run({"eval", "--p", "2", "--R", "2", "--n", "2", "f1^5"}).out == "r=1 d=2: t1\nr=2 d=4: t1\n");
}

TEST_CASE("batch input") {
  const std::string words = golden("batch_d3.words");
  CHECK(run({"trace", "--d", "3", "--n", "3"}, words).out == golden("batch_d3.txt"));
  CHECK(run({"trace", "--d", "3", "--n", "3", "--file", std::string(YH_GOLDEN_DIR) + "/batch_d3.words"}).out ==
        golden("batch_d3.txt"));
  const Result missing = run({"trace", "--d", "3", "--n", "3", "--file", "/nonexistent/words"});
  CHECK(missing.code == yh::cli::kParameterError);
}

TEST_CASE("json output") {
  const Result r = run({"trace", "--p", "3", "--R", "3", "--n", "1", "--format", "json", "f1^{3^3:1,1,1}"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("trace_padic_p3.json"));
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["p"] == 3);
  REQUIRE(doc["levels"].size() == 3);
  CHECK(doc["levels"][2]["r"] == 3);
  CHECK(doc["levels"][2]["d"] == 27);
  CHECK(doc["levels"][2]["trace"] == "x_13");

  const auto single = nlohmann::json::parse(run({"trace", "--d", "9", "--n", "2", "--format", "json", "s1"}).out);
  CHECK(single["p"] == 3);
  CHECK(single["levels"][0]["r"] == 2);
  const auto plain = nlohmann::json::parse(run({"eval", "--d", "6", "--n", "2", "--format", "json", "f1^7"}).out);
  CHECK(plain["p"].is_null());
  CHECK(plain["levels"][0]["r"].is_null());
  CHECK(plain["levels"][0]["element"] == "t1");

  const std::string lines = run({"trace", "--d", "2", "--n", "2", "--format", "json"}, "s1\nf1\n").out;
  std::istringstream in(lines);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    CHECK(nlohmann::json::parse(line)["command"] == "trace");
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("check command") {
  const Result d2 = run({"check", "--d", "2", "--n", "3", "--samples", "20"});
  CHECK(d2.code == yh::cli::kOk);
  CHECK(d2.out.find("FAIL") == std::string::npos);
  CHECK(d2.out.find("checks passed") != std::string::npos);

  const Result hecke = run({"check", "--d", "1", "--n", "3", "--samples", "20"});
  CHECK(hecke.code == 0);
  CHECK(hecke.out.find("PASS  Hecke (g1 + u)(g1 - 1) = 0") != std::string::npos);

  const Result square = run({"check", "--p", "2", "--R", "2", "--n", "2", "--square", "--format", "json"});
  CHECK(square.code == 0);
  const auto doc = nlohmann::json::parse(square.out);
  CHECK(doc["passed"] == true);
  bool has_square = false;
  for (const auto& c : doc["checks"]) {
    CHECK(c["passed"] == true);
    if (c["name"].get<std::string>().rfind("delta(tau_r(x))", 0) == 0) has_square = true;
  }
  CHECK(has_square);
  CHECK(run({"check", "--d", "2", "--n", "2", "--square"}).code == yh::cli::kParameterError);
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"check", "--d", "3", "--n", "2", "--seed", "99", "--samples", "10"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("errors and exit codes") {
  const Result parse = run({"trace", "--d", "2", "--n", "2", "s1 x2"});
  CHECK(parse.code == yh::cli::kParseError);
  CHECK(parse.err.find("column 4") != std::string::npos);

  const Result line = run({"trace", "--d", "2", "--n", "2"}, "s1\n\nbad\n");
  CHECK(line.code == yh::cli::kParseError);
  CHECK(line.out == "z\n");
  CHECK(line.err == "parse error: line 3: unknown token 'bad' (column 1)\n");

  CHECK(run({"trace", "--d", "2", "--n", "2", "s2"}).code == yh::cli::kParseError);
  CHECK(run({"trace", "--d", "0", "--n", "2", "s1"}).code == yh::cli::kParameterError);
  CHECK(run({"trace", "--n", "2", "s1"}).code == yh::cli::kParameterError);
  CHECK(run({"trace", "--d", "2", "--p", "2", "--r", "1", "--n", "2", "s1"}).code == yh::cli::kParameterError);
  CHECK(run({"trace", "--p", "4", "--r", "1", "--n", "2", "s1"}).code == yh::cli::kParameterError);
  CHECK(run({"trace", "--p", "2", "--n", "2", "s1"}).code == yh::cli::kParameterError);
  CHECK(run({"trace", "--p", "2", "--r", "1", "--R", "2", "--n", "2", "s1"}).code == yh::cli::kParameterError);
  CHECK(run({"trace", "--p", "2", "--R", "3", "--n", "2", "f1^{2^2:1,1}"}).code == yh::cli::kParameterError);
  CHECK(run({"trace", "--d", "2", "s1"}).code == yh::cli::kParameterError);
  CHECK(run({"frobnicate"}).code == yh::cli::kParameterError);
  CHECK(run({"trace", "--d", "2", "--n", "2", "--format", "xml", "s1"}).code == yh::cli::kParameterError);
  CHECK(run({"--help"}).code == yh::cli::kOk);
}
