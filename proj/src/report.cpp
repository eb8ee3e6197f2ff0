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
#include "mellin/report.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace mellin {

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

std::string format_double(double v) {
  nlohmann::json j = v;  // shortest round-trip form, deterministic
  return j.dump();
}

}  // namespace

void RunReport::add(std::string name, std::map<std::string, double> inputs,
                    double value, std::optional<double> error_estimate) {
  results.push_back({std::move(name), std::move(inputs), value, error_estimate});
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["params"] = params;
  j["seed"] = seed;
  j["version"] = version;
  j["wall_time"] = wall_time;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json row;
    row["name"] = r.name;
    row["inputs"] = r.inputs;
    row["value"] = r.value;
    if (r.error_estimate)
      row["error_estimate"] = *r.error_estimate;
    else
      row["error_estimate"] = "exact";
    rows.push_back(std::move(row));
  }
  j["results"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string RunReport::to_csv() const {
  std::set<std::string> input_names;
  for (const auto& r : results)
    for (const auto& [k, v] : r.inputs) input_names.insert(k);
  std::ostringstream out;
  out << "name";
  for (const auto& k : input_names) out << ',' << csv_quote(k);
  out << ",value,error_estimate\r\n";
  for (const auto& r : results) {
    out << csv_quote(r.name);
    for (const auto& k : input_names) {
      out << ',';
      auto it = r.inputs.find(k);
      if (it != r.inputs.end()) out << format_double(it->second);
    }
    out << ',' << format_double(r.value) << ',';
    out << (r.error_estimate ? format_double(*r.error_estimate)
                             : std::string("exact"));
    out << "\r\n";
  }
  return out.str();
}

}  // namespace mellin
