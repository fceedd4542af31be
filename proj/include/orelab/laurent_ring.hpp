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

#ifndef ORELAB_LAURENT_RING_HPP
#define ORELAB_LAURENT_RING_HPP

#include <cstdint>

#include "orelab/morphisms.hpp"
#include "orelab/report.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// Truncated Laurent series over a commutative exact base: a pair
/// (valuation, coefficient window of fixed length `prec`). Canonical forms
/// keep a nonzero leading coefficient; products and sums are computed on the
/// common representable window. Equality is declared windowed since the
/// objects model infinite tails.
RingPtr laurent_ring(RingPtr base, unsigned prec);

bool is_laurent_ring(const RingPtr& ring);
RingPtr laurent_base(const RingPtr& ring);
unsigned laurent_prec(const RingPtr& ring);

/// Series c * x^v from a coefficient window starting at exponent `val`.
Elem laurent_make(const RingPtr& ring, long long val,
                  std::vector<Elem> coeffs);

/// The series x.
Elem laurent_x(const RingPtr& ring);

/// First nonzero exponent; throws when the series is zero on its window.
long long laurent_val(const Elem& a);
/// One past the last known exponent.
long long laurent_known_end(const Elem& a);
Elem laurent_coeff(const Elem& a, long long exponent);
bool laurent_is_zero(const Elem& a);

/// Multiplicative inverse; requires a leading coefficient invertible in the
/// base (found by enumeration, or +-1 over Z). Throws otherwise.
Elem laurent_inverse(const Elem& a);

/// The substitution endomorphism x -> x^2 (injective, not surjective).
EndoMap laurent_square_endo(const RingPtr& ring);

/// Bounded non-surjectivity witness for x -> x^2: sampled images have even
/// exponent support and doubled valuation, so no sampled or representable
/// series of valuation in [-window, window] can map onto x.
Report laurent_square_nonsurjectivity(const RingPtr& ring, std::uint64_t seed,
                                      unsigned count, unsigned window);

}  // namespace orelab

#endif  // ORELAB_LAURENT_RING_HPP
