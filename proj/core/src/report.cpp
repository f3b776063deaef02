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

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gibbslab/version.hpp"

namespace gibbslab {

bool ExperimentReport::all_pass() const {
  for (const CheckRecord& c : checks) {
    if (c.asserted && !c.pass) return false;
  }
  return true;
}

namespace {

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = version_string;
  j["generated_at"] = timestamp_utc();
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : config) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckRecord& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    nlohmann::ordered_json in;
    for (const auto& [k, v] : c.inputs) in[k] = v;
    e["inputs"] = in;
    e["computed"] = c.computed;
    e["bound"] = c.bound;
    e["margin"] = c.margin();
    e["pass"] = c.pass;
    e["asserted"] = c.asserted;
    e["wall_ms"] = c.wall_ms;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["all_pass"] = all_pass();
  j["total_wall_ms"] = total_wall_ms;
  return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "name,computed,bound,margin,pass,asserted\n";
  out.precision(17);
  for (const CheckRecord& c : checks) {
    out << c.name << ',' << c.computed << ',' << c.bound << ',' << c.margin() << ','
        << (c.pass ? 1 : 0) << ',' << (c.asserted ? 1 : 0) << '\n';
  }
  return out.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace gibbslab
