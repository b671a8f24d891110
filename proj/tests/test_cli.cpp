#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "hdp/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hdp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "fcp", "--box", "1,1,1,1"}).out == "4\n");
  CHECK(run({"count", "fcp", "--box", "1,1"}).out == "2\n");
  CHECK(run({"count", "class", "--class", "QTC", "--box", "2,2,2"}).out == "10\n");
  CHECK(run({"count", "class", "--class", "SC_QCPP", "--box", "4,2,2"}).out == "3\n");
  const auto budget = run({"count", "class", "--class", "QSYM", "--box", "4,4,4", "--budget", "10"});
  CHECK(budget.code == hdp::cli::budget_exceeded);
  CHECK(run({"count", "class", "--class", "NOPE", "--box", "2,2,2"}).code == hdp::cli::usage);
  CHECK(run({"count", "fcp", "--box", "1,-1,1"}).code == hdp::cli::usage);
}

TEST_CASE("enumerate and paths") {
  const auto r = run({"enumerate", "fcp", "--box", "1,1,1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 3);
  CHECK(j[0]["shape"] == nlohmann::json::array({2, 2}));

  const auto from = run({"path", "from", "--start", "1,1,0", "--steps", "3,1,3,2,1", "--format", "json"});
  REQUIRE(from.code == 0);
  const auto pi = nlohmann::json::parse(from.out);
  CHECK(pi["entries"] == nlohmann::json::array({4, 2, 2, 0, 3, 2, 2, 0, 2, 2, 0, 0, 2, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(run({"path", "from", "--start", "1,1,1", "--steps", "1"}).code == hdp::cli::usage);
  CHECK(run({"path", "from", "--start", "1,0", "--steps", "0"}).code == hdp::cli::usage);
  CHECK(run({"path", "to", "--box", "1,1,1"}).code == 0);
}

TEST_CASE("series") {
  const auto r = run({"series", "qs", "--cap", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("1,1 3\n") != std::string::npos);
  CHECK(run({"series", "macmahon", "--box", "2,2,1", "--format", "json"}).out == "[\"1\",\"1\",\"2\",\"1\",\"1\"]\n");
  CHECK(run({"series", "fcp", "--dim", "0"}).code == hdp::cli::usage);
}

TEST_CASE("verify and tables") {
  const auto v = run({"verify", "thm1.5", "--n-max", "2", "--c-max", "2"});
  CHECK(v.code == 0);
  CHECK(v.out.find("PASS") != std::string::npos);
  const auto c = run({"verify", "conjectures", "--class", "qtcspp2", "--a-max", "2", "--c-max", "2"});
  CHECK(c.out.find("qtcspp2,2,2,9,9,9,match\n") != std::string::npos);
  const auto t = run({"table", "qspp", "--a-max", "2", "--c-max", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("a,c,value\n", 0) == 0);
  CHECK(t.out.find("2,2,20\n") != std::string::npos);
  CHECK(run({"table", "qspp", "--a-max", "2", "--c-max", "2", "--source", "table"}).out == t.out);
  CHECK(run({"table", "qspp", "--source", "nowhere"}).code == hdp::cli::usage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == hdp::cli::usage);
  CHECK(run({"frobnicate"}).code == hdp::cli::usage);
  CHECK(run({"verify", "everything"}).code == hdp::cli::usage);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("count") != std::string::npos);
}
