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

#ifndef ORELAB_SUITES_HPP
#define ORELAB_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "orelab/report.hpp"

namespace orelab {

/// Optional overrides for a verification suite; unset fields take
/// suite-specific defaults (window 16 or 32, precision 8, seed 0,
/// count 100 or 200).
struct SuiteParams {
  std::optional<unsigned> window;
  std::optional<unsigned> precision;
  std::optional<unsigned> count;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> base;  // ring descriptor override
  std::optional<std::uint64_t> budget;
};

/// Names, in the order `suite all` runs them: lemma1_3, lemma1_4, lemma1_7,
/// lemma1_11, prop0_5, thm0_4, prop1_12, ex1_13, ex1_14, ex1_16, lemma1_17,
/// prop1_19, cor1_18, weyl.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws Error for unknown names or invalid
/// overrides.
Report run_suite(const std::string& name, const SuiteParams& params = {});

}  // namespace orelab

#endif  // ORELAB_SUITES_HPP
