// Copyright 2026 The gibbslab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gibbslab/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace gibbslab {
namespace {

ExperimentReport sample_report() {
  ExperimentReport r;
  r.command = "check-db";
  r.config = {{"beta", "0.05"}, {"seed", "17"}};
  CheckRecord good;
  good.name = "db_defect";
  good.inputs = {{"n", 2.0}, {"h", 20.0}};
  good.computed = 1e-12;
  good.bound = 1e-7;
  good.pass = true;
  CheckRecord info;
  info.name = "condition_number";
  info.computed = 3.4;
  info.bound = 0.0;
  info.pass = false;
  info.asserted = false;  // informational rows never gate the outcome
  r.checks = {good, info};
  r.total_wall_ms = 12.5;
  return r;
}

TEST_SUITE_BEGIN("report");

TEST_CASE("margin and asserted-only gating") {
  ExperimentReport r = sample_report();
  CHECK(r.checks[0].margin() == doctest::Approx(1e-7 - 1e-12));
  CHECK(r.all_pass());
  r.checks[0].pass = false;
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("json payload parses and carries every asserted side") {
  ExperimentReport r = sample_report();
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["command"] == "check-db");
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["name"] == "db_defect");
  CHECK(j["checks"][0]["computed"].get<double>() == doctest::Approx(1e-12));
  CHECK(j["checks"][0]["bound"].get<double>() == doctest::Approx(1e-7));
  CHECK(j["checks"][0]["inputs"]["h"].get<double>() == doctest::Approx(20.0));
  CHECK(j["checks"][1]["asserted"] == false);
  CHECK(j.contains("version"));
  CHECK(j.contains("generated_at"));

  // Numerical payload is byte-stable run to run (timestamps aside).
  ExperimentReport r2 = sample_report();
  auto strip = [](std::string s) {
    auto j2 = nlohmann::json::parse(s);
    j2.erase("generated_at");
    j2.erase("total_wall_ms");
    for (auto& c : j2["checks"]) c.erase("wall_ms");
    return j2.dump();
  };
  CHECK(strip(r.to_json()) == strip(r2.to_json()));
}

TEST_CASE("csv header and row count") {
  ExperimentReport r = sample_report();
  std::istringstream in(r.to_csv());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "name,computed,bound,margin,pass,asserted");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("atomic write replaces the file completely") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gibbslab_report_test";
  fs::create_directories(dir);
  fs::path target = dir / "out.json";
  write_atomic(target.string(), "first");
  write_atomic(target.string(), "second");
  std::ifstream in(target);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "second");
  CHECK_FALSE(fs::exists(target.string() + ".tmp"));
  fs::remove_all(dir);
}

TEST_SUITE_END();

}  // namespace
}  // namespace gibbslab
