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
// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure.  Criteria may be selected by number: ./acceptance 1 4 9
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mellin/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> subset;
  for (int i = 1; i < argc; ++i) subset.push_back(std::atoi(argv[i]));
  const auto results = mellin::acceptance::run(subset);
  bool all = true;
  for (const auto& r : results) {
    std::puts(mellin::acceptance::format_line(r).c_str());
    std::fflush(stdout);
    all = all && r.passed;
  }
  if (results.empty()) {
    std::puts("no criteria selected");
    return 1;
  }
  return all ? 0 : 1;
}
