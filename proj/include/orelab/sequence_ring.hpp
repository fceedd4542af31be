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

#ifndef ORELAB_SEQUENCE_RING_HPP
#define ORELAB_SEQUENCE_RING_HPP

#include <vector>

#include "orelab/morphisms.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// The product ring prod_N R of sequences over a base ring, restricted to
/// the representable class: an explicit finite prefix followed by an
/// eventually periodic tail. Pointwise operations stay inside the class
/// (periods combine by lcm); an operation whose period would exceed the
/// internal cap raises an error instead of truncating. Equality is windowed.
RingPtr seq_ring(RingPtr base);

bool is_seq_ring(const RingPtr& ring);
RingPtr seq_base(const RingPtr& ring);

/// Build prefix-then-periodic-tail; `period` must be nonempty.
Elem seq_make(const RingPtr& ring, std::vector<Elem> prefix,
              std::vector<Elem> period);

/// The constant sequence (c, c, c, ...).
Elem seq_const(const RingPtr& ring, const Elem& c);

/// Entry at index i (a base-ring element).
Elem seq_entry(const Elem& a, std::size_t i);

const std::vector<Elem>& seq_prefix(const Elem& a);
const std::vector<Elem>& seq_period(const Elem& a);

/// (head, r0, r1, ...) from (r0, r1, ...); a one-sided inverse witness for
/// the shift endomorphism.
Elem seq_prepend(const Elem& head, const Elem& a);

/// The left-shift endomorphism sigma((r_i)) = (r_{i+1}); surjective on
/// representable sequences, not injective.
EndoMap seq_shift_endo(const RingPtr& ring);

}  // namespace orelab

#endif  // ORELAB_SEQUENCE_RING_HPP
