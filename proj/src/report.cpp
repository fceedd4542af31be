/*
   Copyright 2026 The Orelab Authors

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

#include "orelab/report.hpp"

#include <sstream>

namespace orelab {

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_)
    checks_.push_back(Check{prefix + c.name, c.pass, c.witness});
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  nlohmann::json j;
  j["suite"] = suite_;
  j["seed"] = seed_;
  j["parameters"] = parameters_;
  j["checks"] = std::move(checks);
  return j;
}

std::string Report::pretty() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name;
    if (!c.witness.empty()) out << "  -- " << c.witness;
    out << '\n';
  }
  out << (passed() ? "suite " + suite_ + ": pass"
                   : "suite " + suite_ + ": FAIL")
      << '\n';
  return out.str();
}

}  // namespace orelab
