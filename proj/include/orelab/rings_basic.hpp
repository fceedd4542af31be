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

#ifndef ORELAB_RINGS_BASIC_HPP
#define ORELAB_RINGS_BASIC_HPP

#include <vector>

#include "orelab/morphisms.hpp"
#include "orelab/ring.hpp"

namespace orelab {

// Handle constructors. Each is memoized on its canonical name, so asking
// twice for the same ring yields the same handle (and hence compatible
// elements).

/// The ring of integers, arbitrary precision, exact equality.
RingPtr integer_ring();

/// Z/n for n >= 1; enumerable, exact. Throws on n = 0.
RingPtr mod_ring(std::uint64_t n);

/// Polynomials over `base` in one central variable y, dense ascending
/// coefficients, trailing zeros stripped (when the base is exact).
RingPtr poly_ring(RingPtr base);

/// k x k matrices over `base`; enumerable when the base is and the count
/// fits in 64 bits.
RingPtr matrix_ring(RingPtr base, unsigned k);

bool is_integer_ring(const RingPtr& ring);
bool is_mod_ring(const RingPtr& ring);
bool is_poly_ring(const RingPtr& ring);
bool is_matrix_ring(const RingPtr& ring);

// Typed access for rings constructed above. Each checks the handle kind.

BigInt int_value(const Elem& a);
Elem int_elem(const BigInt& n);  // convenience over integer_ring()

std::uint64_t mod_value(const Elem& a);

const std::vector<Elem>& poly_coeffs(const Elem& a);
Elem poly_from_coeffs(const RingPtr& poly, std::vector<Elem> coeffs);
Elem poly_var(const RingPtr& poly);             // the element y
RingPtr poly_base(const RingPtr& poly);
/// Degree of the canonical form; 0 for the zero polynomial.
unsigned poly_degree(const Elem& a);
bool poly_is_constant(const Elem& a);
Elem poly_coeff_at(const Elem& a, unsigned i);  // base element, 0 beyond end

unsigned matrix_dim(const RingPtr& mat);
RingPtr matrix_base(const RingPtr& mat);
const std::vector<Elem>& matrix_entries(const Elem& a);  // row-major
Elem matrix_from_entries(const RingPtr& mat, std::vector<Elem> entries);
Elem matrix_entry(const Elem& a, unsigned i, unsigned j);

// Named maps on polynomial rings.

/// d/dy with sigma = id; the derivation that makes R[y][x; id, d/dy] a Weyl
/// ring.
SigmaDerivation poly_differentiation(const RingPtr& poly);

/// sigma(sum a_i y^i) = a_0, the constant-term endomorphism.
EndoMap poly_const_term(const RingPtr& poly);

/// delta(sum a_i y^i) = sum_{i>=1} a_i y^{i-1}; a sigma-derivation for
/// sigma = poly_const_term.
SigmaDerivation poly_coeff_shift(const RingPtr& poly);

/// The automorphism y -> -y (its own inverse).
EndoMap poly_y_negate(const RingPtr& poly);

// Named maps on matrix rings.

/// Entrywise lift of a base-ring endomorphism to M_k; inherits an inverse
/// when the base map has one.
EndoMap matrix_entrywise(const RingPtr& mat, const EndoMap& inner);

/// Conjugation m -> u m u^{-1} by a seeded-sampled invertible u; requires an
/// enumerable matrix ring (the inverse of u is found by scan).
EndoMap matrix_inner_automorphism(const RingPtr& mat, std::uint64_t seed);

}  // namespace orelab

#endif  // ORELAB_RINGS_BASIC_HPP
