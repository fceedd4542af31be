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

#ifndef ORELAB_REPORT_HPP
#define ORELAB_REPORT_HPP

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace orelab {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when no witness is attached
};

/// Result of a law check or verification suite.
///
/// JSON schema:
///   { "suite": <name>, "seed": <n>, "parameters": { ... },
///     "checks": [ { "name": ..., "status": "pass"|"fail",
///                   "witness": ... (optional) } ] }
///
/// Serialization is byte-deterministic for a fixed seed: object keys are
/// sorted, check order is insertion order, and no timestamps are recorded.
class Report {
 public:
  Report() = default;
  Report(std::string suite, std::uint64_t seed)
      : suite_(std::move(suite)), seed_(seed) {}

  void set_param(const std::string& key, nlohmann::json value) {
    parameters_[key] = std::move(value);
  }

  void add(std::string name, bool pass, std::string witness = {}) {
    checks_.push_back(Check{std::move(name), pass, std::move(witness)});
  }

  /// Merge another report's checks, prefixing their names.
  void absorb(const Report& other, const std::string& prefix);

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  const std::string& suite() const { return suite_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;

  nlohmann::json to_json() const;
  /// One line per check plus a final verdict, for terminal output.
  std::string pretty() const;

 private:
  std::string suite_;
  std::uint64_t seed_ = 0;
  nlohmann::json parameters_ = nlohmann::json::object();
  std::vector<Check> checks_;
};

}  // namespace orelab

#endif  // ORELAB_REPORT_HPP
