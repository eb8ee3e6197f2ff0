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
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mellin/commands.hpp"
#include "mellin/errors.hpp"
#include "mellin/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Two-sided Mellin transform calculus: stable laws, Bellman-Harris "
      "life-time recovery, and Luria-Delbrueck limit laws"};
  app.set_version_flag("--version", mellin::library_version);

  std::string command;
  std::vector<std::string> params;
  std::vector<std::string> grids;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";
  int threads = 0;

  app.add_option("--command", command,
                 "stable-mellin|stable-density|ml-eval|mellin-check|"
                 "plancherel|bh-recover|bh-fixed-point|bh-simulate|"
                 "ld-simulate|ld-limit|acceptance")
      ->required();
  app.add_option("--param", params, "key=value (repeatable)");
  app.add_option("--grid", grids, "key=start:stop:count (repeatable)");
  app.add_option("--seed", seed, "RNG seed for simulation commands");
  app.add_option("--out", out_path, "output path (stdout when omitted)");
  app.add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "worker threads (0 = hardware)");

  CLI11_PARSE(app, argc, argv);

  mellin::RunConfig config;
  config.command = command;
  config.seed = seed;
  config.output_path = out_path;
  config.threads = threads;
  config.format = format == "csv" ? mellin::RunConfig::Format::csv
                                  : mellin::RunConfig::Format::json;
  try {
    for (const auto& kv : params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw mellin::precondition_error("--param expects key=value, got '" +
                                         kv + "'");
      config.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    for (const auto& kv : grids) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw mellin::precondition_error(
            "--grid expects key=start:stop:count, got '" + kv + "'");
      config.grids[kv.substr(0, eq)] =
          mellin::parse_grid_spec(kv.substr(eq + 1));
    }
  } catch (const mellin::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto outcome = mellin::run(config);
  if (!outcome.error.empty()) std::cerr << "error: " << outcome.error << "\n";

  if (outcome.exit_code != 2) {
    const std::string payload = config.format == mellin::RunConfig::Format::csv
                                    ? outcome.report.to_csv()
                                    : outcome.report.to_json();
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open output path '" << out_path << "'\n";
        return 2;
      }
      file << payload;
    }
  }
  return outcome.exit_code;
}
