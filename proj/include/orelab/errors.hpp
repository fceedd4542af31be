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

#ifndef ORELAB_ERRORS_HPP
#define ORELAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orelab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Binary operation between elements of two distinct ring handles.
class RingMismatchError : public Error {
 public:
  RingMismatchError(const std::string& lhs, const std::string& rhs)
      : Error("ring mismatch: '" + lhs + "' vs '" + rhs + "'") {}
};

/// Exact comparison requested on a ring that only supports windowed equality.
class WindowedEqualityError : public Error {
 public:
  explicit WindowedEqualityError(const std::string& ring)
      : Error("ring '" + ring +
              "' uses windowed equality; supply an explicit window") {}
};

/// Element enumeration requested on a non-enumerable ring.
class NotEnumerableError : public Error {
 public:
  explicit NotEnumerableError(const std::string& ring)
      : Error("ring '" + ring + "' is not enumerable") {}
};

/// Exhaustive search or enumeration exceeded its evaluation budget.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t needed, std::uint64_t budget)
      : Error("evaluation budget exceeded: needs " + std::to_string(needed) +
              ", budget " + std::to_string(budget)) {}
};

/// Free-ring operation produced a word longer than the construction-time cap.
class DegreeBoundError : public Error {
 public:
  DegreeBoundError(std::size_t got, std::size_t bound)
      : Error("degree bound exceeded: word length " + std::to_string(got) +
              " > bound " + std::to_string(bound)) {}
};

/// Mixed-precision or mixed-sigma skew series operation.
class PrecisionMismatchError : public Error {
 public:
  explicit PrecisionMismatchError(const std::string& what) : Error(what) {}
};

/// Expression or ring-descriptor syntax error, with a character position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

}  // namespace orelab

#endif  // ORELAB_ERRORS_HPP
