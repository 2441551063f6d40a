#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using namespace hypgrp;
using nlohmann::json;

namespace {

  std::string const data = HYPGRP_DATA_DIR;

  struct Run {
    int         code = -1;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out;
    std::ostringstream err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path scratch(std::string const& name) {
    auto const dir = std::filesystem::temp_directory_path() / "hypgrp-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
  }

  void write(std::filesystem::path const& p, std::string const& text) {
    std::ofstream(p) << text;
  }

}  // namespace

TEST_CASE("report envelope") {
  Run const r = run({"scan", "--pres", data + "/z3.grp", "--maxlen", "6"});
  REQUIRE(r.code == cli::kOk);
  json const j = json::parse(r.out);
  CHECK(j["tool"] == "hypgrp");
  CHECK(j["version"] == "1.0.0");
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "scan");
  CHECK(j["timing"].contains("wall_seconds"));
  CHECK(j["timing"].contains("threads"));
  for (char const* key : {"config", "results", "flags", "warnings"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["results"]["sup_ratio"]["value"] == 3.0);
}

TEST_CASE("scan reports are identical apart from timing") {
  std::vector<json> reports;
  for (int i = 0; i < 2; ++i) {
    Run const r = run({"scan", "--pres", data + "/z3.grp", "--maxlen", "9"});
    REQUIRE(r.code == cli::kOk);
    json j = json::parse(r.out);
    j.erase("timing");
    reports.push_back(j);
  }
  CHECK(reports[0].dump() == reports[1].dump());
}

TEST_CASE("serial and parallel scans agree") {
  Run const a = run({"scan", "--pres", data + "/z2.grp", "--maxlen", "4"});
  Run const b
      = run({"--serial", "scan", "--pres", data + "/z2.grp", "--maxlen", "4"});
  REQUIRE(a.code == cli::kOk);
  REQUIRE(b.code == cli::kOk);
  CHECK(json::parse(a.out)["results"] == json::parse(b.out)["results"]);
}

TEST_CASE("output file") {
  auto const path = scratch("report.json");
  std::filesystem::remove(path);
  Run const r = run({"--output", path.string(), "area", "--pres",
                     data + "/z3.grp", "--word", "aaaaaa"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  json const    j = json::parse(in);
  CHECK(j["results"]["area"] == 18);
  CHECK(j["results"]["exact"] == true);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({}).code == cli::kInput);
  CHECK(run({"bogus"}).code == cli::kInput);
  CHECK(run({"scan", "--pres", data + "/missing.grp"}).code == cli::kInput);
  Run const r
      = run({"area", "--pres", data + "/z3.grp", "--word", "aa"});
  CHECK(r.code == cli::kInput);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"area", "--pres", data + "/z3.grp", "--word", "aAaaa"}).code
        == cli::kInput);
  CHECK(run({"boundary", "--rank", "0", "--depth", "2"}).code == cli::kInput);
}

TEST_CASE("invariant violations exit with 1") {
  auto const path = scratch("asymmetric.json");
  write(path, R"({"matrix": [[0, 1, 2], [1, 0, 1], [3, 1, 0]]})");
  Run const r = run({"qaudit", "--cloud", path.string()});
  CHECK(r.code == cli::kInvariant);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("budget exhaustion exits with 3") {
  Run const r = run({"area", "--pres", data + "/z2.grp", "--word",
                     "aabbAABB", "--max-area", "40"});
  CHECK(r.code == cli::kBudget);
  CHECK(r.err.find(">= 41") != std::string::npos);
}

TEST_CASE("node budget from the environment") {
  std::vector<std::string> const args{"area", "--pres", data + "/z2.grp",
                                      "--word", "aabbAABB"};
  ::setenv(cli::kNodeBudgetVariable, "1", 1);
  CHECK(run(args).code == cli::kBudget);
  std::vector<std::string> with_nodes = args;
  with_nodes.insert(with_nodes.end(), {"--nodes", "100000000"});
  CHECK(run(with_nodes).code == cli::kOk);
  ::setenv(cli::kNodeBudgetVariable, "zero", 1);
  CHECK(run(args).code == cli::kInput);
  ::unsetenv(cli::kNodeBudgetVariable);
  CHECK(run(args).code == cli::kOk);
}

TEST_CASE("help exits with 0") {
  CHECK(run({"--help"}).code == cli::kOk);
}
