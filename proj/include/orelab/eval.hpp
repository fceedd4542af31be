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

#ifndef ORELAB_EVAL_HPP
#define ORELAB_EVAL_HPP

#include <optional>
#include <string>

#include "orelab/expr.hpp"
#include "orelab/lazy_matrix.hpp"
#include "orelab/ore_poly.hpp"
#include "orelab/ring.hpp"
#include "orelab/skew_series.hpp"

namespace orelab {

/// A computed value: a ring element, an Ore polynomial, a truncated skew
/// series, or an infinite matrix (banded or general lazy form).
struct Value {
  enum class Kind { Ring, Ore, Series, Banded, Lazy };
  Kind kind = Kind::Ring;
  Elem elem;
  OrePoly poly;
  SkewSeries series;
  BandedMatrix banded;
  LazyMatrix lazy;

  static Value of(Elem e);
  static Value of(OrePoly p);
  static Value of(SkewSeries s);
  static Value of(BandedMatrix b);
  static Value of(LazyMatrix m);
};

/// Evaluation bindings: the working ring, and optionally an Ore extension
/// over it (binding the symbol x and the call names sigma/delta).
struct EvalContext {
  RingPtr ring;
  OreRingPtr ore;  // null for plain ring evaluation
  std::optional<EndoMap> sigma;
  std::optional<SigmaDerivation> delta;
  unsigned precision = 8;  // for theta and series promotion
};

/// Builds a context from descriptor strings. An empty sigma name evaluates
/// in the plain ring; otherwise the Ore extension ring[x; sigma, delta] is
/// constructed (delta defaults to the zero map) and law-checked.
EvalContext make_context(const std::string& ring_spec,
                         const std::string& sigma_name = "",
                         const std::string& delta_name = "",
                         unsigned precision = 8, std::uint64_t seed = 0,
                         unsigned law_check_count = 100);

/// Evaluates the tree in the context. Unbound symbols, ring mismatches and
/// kind mismatches throw Error; syntax problems in nested literals throw
/// ParseError.
Value eval_expression(const AstPtr& ast, const EvalContext& ctx);

std::string value_show(const Value& v);
nlohmann::json value_to_json(const Value& v);

}  // namespace orelab

#endif  // ORELAB_EVAL_HPP
