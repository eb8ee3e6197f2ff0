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
#include <string>

#include "mellin/report.hpp"

namespace mellin {

/// Inclusive numeric grid "start:stop:count" (count = 1 pins start).
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> points() const;
};
GridSpec parse_grid_spec(const std::string& text);

struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  std::map<std::string, GridSpec> grids;
  std::uint64_t seed = 1;
  std::string output_path;
  enum class Format { json, csv } format = Format::json;
  int threads = 0;
};

struct RunOutcome {
  RunReport report;
  int exit_code = 0;      // 0 ok, 2 validation error, 3 numerical failure
  std::string error;
};

/// Validates the config against the target operation's preconditions, then
/// dispatches.  Validation failures produce exit code 2 with no results;
/// numerical failures produce exit code 3 with the partial report retained.
RunOutcome run(const RunConfig& config);

}  // namespace mellin
