#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "walsh/spectrum_io.hpp"

using namespace walsh;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "walshspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({"params", "--p", "2", "--l", "7"}).code == 0);
  CHECK(invoke({"params", "--p", "7", "--l", "11"}).code == 2);
  CHECK(invoke({"params", "--p", "2", "--l", "13"}).code == 2);
  CHECK(invoke({"params", "--p", "2"}).code == 64);
  CHECK(invoke({}).code == 64);
  CHECK(invoke({"frobnicate"}).code == 64);
  CHECK(invoke({"params", "--p", "2", "--l", "7", "--format", "xml"}).code == 64);
  CHECK(invoke({"params", "--p", "two", "--l", "7"}).code == 64);
  CHECK(invoke({"verify", "--p", "2", "--l", "7", "--verify_bound", "1"}).code == 64);
  CHECK(invoke({"verify", "--p", "2", "--l", "7", "--verify_bound", "lots"}).code == 64);
  CHECK(invoke({"cyclo", "--p", "2"}).code == 2);
}

TEST_CASE("flag placement") {
  const auto before = invoke({"--p", "2", "--l", "7", "params"});
  const auto after = invoke({"params", "--p", "2", "--l", "7"});
  CHECK(before.code == 0);
  CHECK(before.out == after.out);
}

TEST_CASE("spectrum output") {
  const auto r = invoke({"spectrum", "--p", "2", "--l", "7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["lines"].size() == 6);
  CHECK(doc["distinct_values"] == 5);

  const auto csv = invoke({"spectrum", "--p", "2", "--l", "7", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(same_multiset(lines_from_csv(csv.out, 2, 7), lines_from_json(doc)));
  CHECK(invoke({"spectrum", "--p", "2", "--l", "7", "--format", "text"}).out.find("lH1_0") != std::string::npos);
}

TEST_CASE("identical flags give identical bytes") {
  const std::vector<std::string> args{"spectrum", "--p", "11", "--l", "7", "--seed", "3"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> v{"verify", "--p", "2", "--l", "7"};
  CHECK(invoke(v).out == invoke(v).out);
}

TEST_CASE("verify command") {
  const auto r = invoke({"verify", "--p", "2", "--l", "7"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(invoke({"verify", "--p", "3", "--l", "107", "--format", "text"}).code == 0);
  CHECK(invoke({"verify", "--p", "11", "--l", "7", "--format", "csv"}).out.rfind("name,status,detail\n", 0) == 0);
}

TEST_CASE("large instance spectrum") {
  const auto r = invoke({"spectrum", "--p", "3", "--l", "107"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  BigInt total = 0;
  for (const auto& line : doc["lines"]) total += BigInt(line["frequency"].get<std::string>());
  CHECK(total == big_pow(3, 5671));
  CHECK(doc["params"]["h"] == 3);
}

TEST_CASE("gauss, cyclo and trace-table commands") {
  const auto g = invoke({"gauss", "--p", "2", "--l", "7"});
  CHECK(g.code == 0);
  const auto gd = nlohmann::json::parse(g.out);
  CHECK(gd["index2"].size() == 4);
  CHECK(gd["index2"][0]["agree"] == true);
  CHECK(invoke({"gauss", "--p", "11", "--l", "7", "--format", "text"}).code == 0);

  const auto c = invoke({"cyclo", "--p", "3", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.find("3,12,531441") != std::string::npos);

  const auto t = invoke({"trace-table", "--p", "2", "--l", "7"});
  CHECK(t.code == 0);
  const auto td = nlohmann::json::parse(t.out);
  CHECK(td["in_field_match"] == true);
  CHECK(td["row"].size() == 49);
  const auto t11 = nlohmann::json::parse(invoke({"trace-table", "--p", "11", "--l", "7"}).out);
  CHECK(t11["epsilon"] == 6);
  CHECK(t11["entries"]["k=0"] == 10);
}

TEST_CASE("output file") {
  const std::string path = "walshspec_cli_test_output.json";
  const auto r = invoke({"params", "--p", "2", "--l", "7", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(nlohmann::json::parse(s.str())["f"] == 21);
  std::remove(path.c_str());
  CHECK(invoke({"params", "--p", "2", "--l", "7", "--output", "/nonexistent-dir/x.json"}).code == 64);
}
