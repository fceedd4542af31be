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

#ifndef ORELAB_BIGINT_HPP
#define ORELAB_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

namespace orelab {

// All integer arithmetic in the library is arbitrary-precision; iterated
// Weyl-relation products overflow fixed-width types quickly.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// JSON encoding of a big integer: a plain number while it fits in 64 bits,
/// a decimal string beyond that.
inline nlohmann::json bigint_to_json(const BigInt& n) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (n >= lo && n <= hi) return nlohmann::json(static_cast<std::int64_t>(n));
  return nlohmann::json(n.str());
}

}  // namespace orelab

#endif  // ORELAB_BIGINT_HPP
