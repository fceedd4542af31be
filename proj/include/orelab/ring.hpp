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

#ifndef ORELAB_RING_HPP
#define ORELAB_RING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>

#include "orelab/bigint.hpp"
#include "orelab/errors.hpp"
#include "orelab/rng.hpp"

namespace orelab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A value belonging to some registered ring. The payload representation is
/// owned by the ring implementation; elements are immutable after
/// construction and cheap to copy (two shared pointers).
class Elem {
 public:
  Elem() = default;
  Elem(RingPtr ring, std::shared_ptr<const void> payload)
      : ring_(std::move(ring)), payload_(std::move(payload)) {}

  bool valid() const { return ring_ != nullptr; }
  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  /// Ring implementations downcast their own payloads with this. The type
  /// argument must match the representation the owning ring stores.
  template <class T>
  const T& payload() const {
    return *static_cast<const T*>(payload_.get());
  }

 private:
  RingPtr ring_;
  std::shared_ptr<const void> payload_;
};

/// Capability flags carried by every ring handle. Exactly one of exact and
/// windowed equality holds; `characteristic` is 0 for characteristic zero.
struct RingCaps {
  bool enumerable = false;
  bool exact_equality = true;
  BigInt characteristic = 0;
};

/// Abstract unital associative ring with a deterministic seeded sampler.
///
/// Binary operations require both operands to come from the same handle
/// (pointer identity); anything else throws RingMismatchError rather than
/// coercing.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  const std::string& name() const { return name_; }
  const RingCaps& caps() const { return caps_; }

  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;

  /// Canonical image of an integer, n * 1 (double-and-add by default).
  virtual Elem from_int(const BigInt& n) const;

  virtual Elem add(const Elem& a, const Elem& b) const = 0;
  virtual Elem neg(const Elem& a) const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  /// Exact equality. Rings with windowed semantics throw
  /// WindowedEqualityError; use eq_window there.
  virtual bool eq(const Elem& a, const Elem& b) const;

  /// Equality on the leading window (entries/coefficients below `window`).
  /// Exact rings ignore the window and compare exactly.
  virtual bool eq_window(const Elem& a, const Elem& b, unsigned window) const;

  virtual Elem sample(Rng& rng) const = 0;

  /// Number of elements; throws NotEnumerableError unless enumerable, and
  /// BudgetExceededError when the count does not fit in 64 bits.
  virtual std::uint64_t enum_size() const;
  /// The index-th element, 0 <= index < enum_size(). Each element appears
  /// exactly once over the full index range.
  virtual Elem enum_at(std::uint64_t index) const;

  /// True only when the representation itself shows the value is zero.
  /// Exact rings decide this; windowed rings default to false (an unknown
  /// tail could be anything), except where the representation is finite
  /// (eventually periodic sequences). Display code uses this to skip terms.
  virtual bool definitely_zero(const Elem& a) const;

  virtual std::string show(const Elem& a) const = 0;
  virtual nlohmann::json to_json(const Elem& a) const;

  /// Canonical serialization usable as a hash/map key (exact rings).
  std::string key(const Elem& a) const { return to_json(a).dump(); }

 protected:
  Ring(std::string name, RingCaps caps)
      : name_(std::move(name)), caps_(std::move(caps)) {}

  Elem make(std::shared_ptr<const void> payload) const {
    return Elem(shared_from_this(), std::move(payload));
  }

  void require_mine(const Elem& e) const;

 private:
  std::string name_;
  RingCaps caps_;
};

/// Same-handle check for binary operations.
void require_same_ring(const Elem& a, const Elem& b);

/// Equality dispatch: exact when the ring supports it, windowed otherwise.
bool eq_at(const Elem& a, const Elem& b, unsigned window);

bool is_zero_at(const Elem& a, unsigned window);

// Arithmetic sugar; forwards to the owning ring with mismatch checks.
Elem operator+(const Elem& a, const Elem& b);
Elem operator-(const Elem& a, const Elem& b);
Elem operator*(const Elem& a, const Elem& b);
Elem operator-(const Elem& a);

/// a^n by repeated multiplication, n >= 0.
Elem elem_pow(const Elem& a, std::uint64_t n);

/// Process-wide handle registry. Returns the ring registered under `name`,
/// creating it with `create` on first request, so every canonical descriptor
/// maps to a single handle and elements built in different places compose.
RingPtr intern_ring(const std::string& name,
                    const std::function<RingPtr()>& create);

}  // namespace orelab

#endif  // ORELAB_RING_HPP
