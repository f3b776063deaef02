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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gibbslab {

// One verified inequality: computed value against its bound.  Checks with
// asserted=false are informational (out-of-regime values are reported but do
// not gate the run).
struct CheckRecord {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;
  double computed = 0.0;
  double bound = 0.0;
  bool pass = false;
  bool asserted = true;
  double wall_ms = 0.0;

  double margin() const { return bound - computed; }
};

struct ExperimentReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckRecord> checks;
  double total_wall_ms = 0.0;

  bool all_pass() const;  // over asserted checks only

  // Deterministic except for the generated_at timestamp: identical inputs
  // and seed reproduce every numerical field byte-for-byte.
  std::string to_json() const;
  std::string to_csv() const;
};

// Writes via a temporary file in the target directory plus an atomic rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace gibbslab
