#include "doctest.h"
#include "json.hpp"
#include "schmidt_cli/cli.hpp"
#include "schmidt_cli/sweep.hpp"
#include "schmidt_cli/table_store.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace schmidt;
using namespace schmidt::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("schmidt_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(Range::parse("3", 1, "n") == Range{3, 3});
  CHECK(Range::parse("1..25", 1, "n") == Range{1, 25});
  CHECK_THROWS_AS(Range::parse("0..5", 1, "n"), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse("5..2", 1, "n"), std::invalid_argument);
  CHECK_THROWS_AS(Range::parse("x", 1, "n"), std::invalid_argument);
  CHECK(Range{2, 7}.to_string() == "2..7");
}

TEST_CASE("sweep spec validation and cell order") {
  SweepSpec s;
  s.n = {1, 2};
  s.r = {1, 1};
  auto cells = s.cells();
  REQUIRE(cells.size() == 4);
  CHECK(cells[0].n == 1);
  CHECK(cells[0].epsilon == Sign::minus);
  CHECK(cells[1].epsilon == Sign::plus);
  CHECK(cells[2].n == 2);

  s.a = {1, 1};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.check = CheckKind::kk1;
  CHECK_NOTHROW(s.validate());
  s.check = CheckKind::odd_power;
  s.m = {1, 2};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.exploratory = true;
  CHECK_NOTHROW(s.validate());
  s.constructive = true;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"--help"}).code == kPass);
  CHECK(invoke({"--version"}).code == kPass);
  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"frobnicate"}).code == kUsage);
  CHECK(invoke({"verify", "--n", "0..5"}).code == kUsage);
  CHECK(invoke({"verify", "--check", "nope"}).code == kUsage);
  CHECK(invoke({"verify", "--a", "1"}).code == kUsage);
  CHECK(invoke({"verify", "--check", "odd_power", "--m", "2"}).code == kUsage);
  CHECK(invoke({"verify", "--check", "pan", "--constructive"}).code == kUsage);
  CHECK(invoke({"identity", "main5", "--m", "1"}).code == kUsage);
  CHECK(invoke({"linearize", "--indices", "1,,2", "--r", "1"}).code == kUsage);
  CHECK(invoke({"verify", "--n", "1..6", "--m", "1..2", "--r", "1..2"}).code == kPass);
}

TEST_CASE("verify summary line") {
  auto o = invoke({"verify", "--n", "1..4", "--m", "1", "--r", "1..2"});
  CHECK(o.code == kPass);
  CHECK(o.out == "theorem: 16 cells, 16 pass, 0 fail\n");
}

TEST_CASE("table and linearize output") {
  CHECK(invoke({"btable", "--m", "1", "--r", "2"}).out == "b[1]=1 b[2]=2\n");
  CHECK(invoke({"btable", "--m", "2", "--r", "2"}).out == "b[2]=1 b[3]=6 b[4]=6\n");
  CHECK(invoke({"btable", "--m", "3", "--r", "1"}).out == "b[3]=1\n");
  CHECK(invoke({"ctable", "--j", "0", "--a", "1"}).out == "c[0]=0 c[1]=1\n");
  CHECK(invoke({"ctable", "--j", "1", "--a", "1"}).out == "c[0]=2 c[1]=1\n");

  auto lin = invoke({"linearize", "--indices", "1,2", "--r", "1"});
  CHECK(lin.code == kPass);
  CHECK(lin.out.rfind("{2: 6, 3: 9}\n", 0) == 0);
  CHECK(lin.out.find("pass") != std::string::npos);

  for (const char* which : {"main12", "main13"}) {
    auto o = invoke({"identity", which, "--n", "10"});
    CHECK(o.code == kPass);
  }
  CHECK(invoke({"identity", "repeat", "--i", "3", "--j", "5"}).code == kPass);
  CHECK(invoke({"identity", "main14", "--j", "2", "--a", "3"}).code == kPass);
  CHECK(invoke({"identity", "sq_weight", "--a", "4"}).code == kPass);
  CHECK(invoke({"identity", "main8", "--m", "2", "--k", "3"}).code == kPass);
  CHECK(invoke({"identity", "main5", "--m", "2", "--r", "3"}).code == kPass);
}

TEST_CASE("json manifest content") {
  auto o = invoke({"verify", "--n", "2", "--m", "1", "--r", "1", "--sign", "+", "--json", "-",
                   "--stable-output"});
  REQUIRE(o.code == kPass);
  auto doc = nlohmann::json::parse(o.out);
  CHECK(doc["schema"] == kManifestSchema);
  CHECK(doc["verdict"] == "pass");
  REQUIRE(doc["cells"].size() == 1);
  const auto& cell = doc["cells"][0];
  CHECK(cell["n"] == 2);
  CHECK(cell["epsilon"] == 1);
  CHECK(cell["verdict"] == "pass");
  CHECK(cell["witness"].is_null());
  CHECK(cell["coefficients"] == nlohmann::json({"4", "6"}));
  CHECK(cell["elapsed_ms"] == 0);
  CHECK(o.err.find("1 cells, 1 pass") != std::string::npos);
}

TEST_CASE("unwritable output is a usage error") {
  const fs::path dir = scratch_dir("unwritable");
  const fs::path blocker = dir / "file";
  std::ofstream(blocker) << "x";
  auto o = invoke({"verify", "--json", (blocker / "out.json").string()});
  CHECK(o.code == kUsage);
  auto c = invoke({"btable", "--m", "1", "--r", "1", "--cache", (blocker / "t.json").string()});
  CHECK(c.code == kUsage);
  fs::remove_all(dir);
}

TEST_CASE("stable output is deterministic and independent of job count") {
  const fs::path dir = scratch_dir("determinism");
  std::vector<std::string> base = {"verify", "--n", "1..9", "--m", "1..3", "--r", "1..3",
                                   "--stable-output", "--json"};
  auto with = [&](const std::string& file, std::vector<std::string> extra) {
    auto args = base;
    args.push_back((dir / file).string());
    args.insert(args.end(), extra.begin(), extra.end());
    CHECK(invoke(args).code == kPass);
    return slurp(dir / file);
  };
  const std::string first = with("a.json", {"-j", "1"});
  const std::string second = with("b.json", {"-j", "1"});
  const std::string parallel = with("c.json", {"-j", "4"});
  CHECK(!first.empty());
  CHECK(first == second);
  CHECK(first == parallel);
  fs::remove_all(dir);
}

TEST_CASE("cache warm, cold and corrupted runs agree") {
  const fs::path dir = scratch_dir("cache");
  const fs::path cache = dir / "tables.json";
  auto sweep = [&](const std::string& out) {
    auto o = invoke({"verify", "--n", "1..8", "--m", "1..2", "--r", "1..2", "--constructive",
                     "--stable-output", "--json", (dir / out).string(), "--cache", cache.string()});
    CHECK(o.code == kPass);
    return slurp(dir / out);
  };
  const std::string cold = sweep("cold.json");
  REQUIRE(fs::exists(cache));
  auto stored = nlohmann::json::parse(slurp(cache));
  CHECK(stored["schema"] == kTableSchema);
  CHECK(stored["btables"]["1,2"] == nlohmann::json({"1", "2"}));

  const std::string warm = sweep("warm.json");
  CHECK(cold == warm);

  stored["btables"]["1,2"] = nlohmann::json({"1", "3"});
  std::ofstream(cache) << stored.dump();
  std::ostringstream out, err;
  const int code = run({"btable", "--m", "1", "--r", "2", "--cache", cache.string()}, out, err);
  CHECK(code == kPass);
  CHECK(out.str() == "b[1]=1 b[2]=2\n");
  CHECK(err.str().find("failed validation") != std::string::npos);
  CHECK(nlohmann::json::parse(slurp(cache))["btables"]["1,2"] == nlohmann::json({"1", "2"}));

  std::ofstream(cache) << "not json";
  CHECK(sweep("garbled.json") == cold);
  fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  const fs::path dir = scratch_dir("env");
  ::setenv(kCacheDirEnv, dir.string().c_str(), 1);
  CHECK(resolve_cache_path("") == dir / "tables.json");
  CHECK(resolve_cache_path("x.json") == fs::path("x.json"));
  CHECK(invoke({"ctable", "--j", "2", "--a", "2"}).out == "c[0]=36 c[1]=18 c[2]=1\n");
  CHECK(fs::exists(dir / "tables.json"));
  ::unsetenv(kCacheDirEnv);
  CHECK(resolve_cache_path("").empty());
  fs::remove_all(dir);
}
