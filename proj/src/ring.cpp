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

#include "orelab/ring.hpp"

#include <map>
#include <mutex>

namespace orelab {

Elem Ring::from_int(const BigInt& n) const {
  // n * 1 by double-and-add on the absolute value.
  BigInt m = n < 0 ? BigInt(-n) : n;
  Elem acc = zero();
  Elem p = one();
  while (m > 0) {
    if ((m & 1) != 0) acc = add(acc, p);
    m >>= 1;
    if (m > 0) p = add(p, p);
  }
  return n < 0 ? neg(acc) : acc;
}

bool Ring::eq(const Elem& a, const Elem& b) const {
  (void)a;
  (void)b;
  throw WindowedEqualityError(name_);
}

bool Ring::eq_window(const Elem& a, const Elem& b, unsigned window) const {
  (void)window;
  return eq(a, b);
}

std::uint64_t Ring::enum_size() const { throw NotEnumerableError(name_); }

Elem Ring::enum_at(std::uint64_t) const { throw NotEnumerableError(name_); }

bool Ring::definitely_zero(const Elem& a) const {
  if (!caps_.exact_equality) return false;
  return eq(a, zero());
}

nlohmann::json Ring::to_json(const Elem& a) const { return show(a); }

void Ring::require_mine(const Elem& e) const {
  if (!e.valid() || e.ring_ptr().get() != this)
    throw RingMismatchError(name_, e.valid() ? e.ring().name() : "<invalid>");
}

void require_same_ring(const Elem& a, const Elem& b) {
  if (!a.valid() || !b.valid())
    throw Error("operation on default-constructed element");
  if (a.ring_ptr().get() != b.ring_ptr().get())
    throw RingMismatchError(a.ring().name(), b.ring().name());
}

bool eq_at(const Elem& a, const Elem& b, unsigned window) {
  require_same_ring(a, b);
  if (a.ring().caps().exact_equality) return a.ring().eq(a, b);
  return a.ring().eq_window(a, b, window);
}

bool is_zero_at(const Elem& a, unsigned window) {
  return eq_at(a, a.ring().zero(), window);
}

Elem operator+(const Elem& a, const Elem& b) {
  require_same_ring(a, b);
  return a.ring().add(a, b);
}

Elem operator-(const Elem& a, const Elem& b) {
  require_same_ring(a, b);
  return a.ring().sub(a, b);
}

Elem operator*(const Elem& a, const Elem& b) {
  require_same_ring(a, b);
  return a.ring().mul(a, b);
}

Elem operator-(const Elem& a) { return a.ring().neg(a); }

Elem elem_pow(const Elem& a, std::uint64_t n) {
  Elem acc = a.ring().one();
  for (std::uint64_t i = 0; i < n; ++i) acc = acc * a;
  return acc;
}

RingPtr intern_ring(const std::string& name,
                    const std::function<RingPtr()>& create) {
  static std::mutex mutex;
  static std::map<std::string, RingPtr> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(name);
  if (it != registry.end()) return it->second;
  RingPtr ring = create();
  registry.emplace(name, ring);
  return ring;
}

}  // namespace orelab
