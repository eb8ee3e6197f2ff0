/*
   Copyright 2026 The mellin-calculus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mellin {

/// One numeric result with the inputs that produced it.  A missing error
/// estimate serializes as "exact".
struct ResultRow {
  std::string name;
  std::map<std::string, double> inputs;
  double value = 0.0;
  std::optional<double> error_estimate;
};

/// Reproducible run record.  JSON field names are part of the CLI contract:
/// {"command", "params", "seed", "results", "version", "wall_time"}; two runs
/// with the same config and seed must serialize byte-identically except for
/// wall_time.
struct RunReport {
  std::string command;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::vector<ResultRow> results;
  double wall_time = 0.0;
  std::string version;

  void add(std::string name, std::map<std::string, double> inputs, double value,
           std::optional<double> error_estimate = std::nullopt);

  std::string to_json() const;
  /// Flat projection: header "name,<input names>,value,error_estimate",
  /// one RFC-4180 row per result.
  std::string to_csv() const;
};

}  // namespace mellin
