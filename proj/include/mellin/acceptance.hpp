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

#include <string>
#include <vector>

namespace mellin::acceptance {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  double worst = 0.0;        // worst measured deviation (criterion-specific)
  double tolerance = 0.0;    // the pinned tolerance it was held to
  double budget_seconds = 0.0;
  double elapsed_seconds = 0.0;
  std::string detail;
};

/// Runs the numbered acceptance criteria (all nine when `subset` is empty).
/// Each criterion is self-contained, pins its tolerances in code, and fails
/// on budget overrun as well as on tolerance violation.
std::vector<CriterionResult> run(const std::vector<int>& subset = {},
                                 int threads = 0);

/// One "[PASS]/[FAIL] criterion k: ..." line per result.
std::string format_line(const CriterionResult& r);

}  // namespace mellin::acceptance
