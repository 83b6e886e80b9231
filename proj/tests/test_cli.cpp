#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "../tools/cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bcfib::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

const char* kHeader = "n,F,L,BF_re,BF_i,BF_j,BF_k,BL_re,BL_i,BL_j,BL_k,radicand";

}  // namespace

TEST_CASE("table") {
  auto r = run({"table", "--from", "0", "--to", "2", "--format", "csv"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == kHeader);
  CHECK(rows[1].rfind("0,0,2,0,1,1,2,", 0) == 0);
  CHECK(rows[2].rfind("1,1,1,1,1,2,3,", 0) == 0);
  CHECK(rows[3].rfind("2,1,3,1,2,3,5,", 0) == 0);

  r = run({"table", "--from", "0", "--to", "0", "--format", "csv"});
  rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].substr(rows[1].rfind(',') + 1) == "6");

  r = run({"table", "--from", "-2", "--to", "-1", "--format", "csv"});
  rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].rfind("-2,-1,3,-1,1,0,1,", 0) == 0);
  CHECK(rows[2].rfind("-1,1,-1,1,0,1,1,", 0) == 0);

  r = run({"table", "--from", "0", "--to", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\xE2\x89\x88") != std::string::npos);  // the approximation mark

  auto j = nlohmann::json::parse(run({"table", "--from", "5", "--to", "6", "--format", "json"}).out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["F"] == "5");

  CHECK(run({"table", "--from", "3", "--to", "1"}).code == 2);
  CHECK(run({"table", "--from", "0", "--to", "1", "--format", "xml"}).code == 2);
}

TEST_CASE("overlapping table ranges agree row by row") {
  const auto a = lines(run({"table", "--from", "-10", "--to", "20", "--format", "csv"}).out);
  const auto b = lines(run({"table", "--from", "5", "--to", "40", "--format", "csv"}).out);
  // n = 5..20 sits at offset 16 in a and offset 1 in b.
  for (int n = 5; n <= 20; ++n) CHECK(a[n + 11] == b[n - 4]);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--claim", "C-T4F", "--n", "0..50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  r = run({"verify", "--claim", "C-T5L", "--n", "1..10", "--format", "json"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  const auto& e = j["claims"][0];
  CHECK(e["verdict"] == "FAIL");
  CHECK(e["points_checked"] == "10");
  CHECK(e["first_counterexample"]["bindings"]["n"] == "1");
  CHECK(e["first_counterexample"]["residual"] == nlohmann::json{{"re", "0"}, {"i", "0"}, {"j", "20"}, {"k", "10"}});

  r = run({"verify", "--all", "--format", "json"});
  CHECK(r.code == 1);
  j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["total"] == "24");
  CHECK(j["summary"]["pass"] == "15");

  CHECK(run({"verify", "--eq", "BF[n] + BF[n+1] == BF[n+2]", "--n", "0..30"}).code == 0);
  CHECK(run({"verify", "--claim", "C-NOPE"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--claim", "C-T5F", "--n", "-4..0"}).code == 2);
  CHECK(run({"verify", "--claim", "C-T4F", "--n", "9..3"}).code == 2);
  CHECK(run({"verify", "--eq", "F[n] =="}).code == 2);
}

TEST_CASE("eval") {
  auto r = run({"eval", "BF[0]*BF[1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "3 - 6i - 4j + 5k\n");
  CHECK(run({"eval", "F[10]"}).out == "55\n");
  CHECK(run({"eval", "BF[n]", "--n", "-1"}).out == "1 + 0i + 1j + 1k\n");

  r = run({"eval", "F[n] + "});
  CHECK(r.code == 2);
  CHECK(r.err.find("offset 7") != std::string::npos);
  CHECK(run({"eval", "F[n]"}).code == 2);
  CHECK(run({"eval", "G[1]"}).code == 2);

  auto j = nlohmann::json::parse(run({"eval", "BL[m]", "--m", "2", "--format", "json"}).out);
  CHECK(j == nlohmann::json{{"re", "3"}, {"i", "4"}, {"j", "7"}, {"k", "11"}});
}

TEST_CASE("bench") {
  auto r = run({"bench", "--n", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digits = 209\n") != std::string::npos);
  r = run({"bench", "--n", "0"});
  CHECK(r.out.find("digits = 1\n") != std::string::npos);
  CHECK(r.out.find("value = 0\n") != std::string::npos);
  r = run({"bench", "--n", "200000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("iterative_seconds = skipped") != std::string::npos);
  CHECK(run({"bench", "--n", "-1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("approximate square roots") {
  CHECK(bcfib::cli::approx_sqrt(6) == "2.44948974278318");
  CHECK(bcfib::cli::approx_sqrt(0) == "0");
  CHECK(bcfib::cli::approx_sqrt(mpz_class("100")) == "10.0000000000000");
}
