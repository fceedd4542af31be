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

#ifndef ORELAB_FREE_RING_HPP
#define ORELAB_FREE_RING_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orelab/morphisms.hpp"
#include "orelab/ore_poly.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// Length-lexicographic word order; the storage and serialization order for
/// free-ring terms.
struct LenLexLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using FreeTermMap = std::map<std::string, BigInt, LenLexLess>;

/// Free Z-algebra on single-letter generators, optionally modulo an
/// annihilating rewrite system: every rule is a forbidden factor whose
/// occurrence kills the word. Such systems terminate and are confluent, so
/// normal forms (factor-free words) are unique. Words are capped at
/// `degree_bound`; operations that would exceed it throw DegreeBoundError.
RingPtr free_ring(const std::string& alphabet,
                  std::vector<std::string> forbidden_factors,
                  std::size_t degree_bound = 8);

/// Z<u,v>.
RingPtr free_ring_uv();

/// Z<u,v,x> / (xu, xv).
RingPtr free_ring_uvx_rel();

bool is_free_ring(const RingPtr& ring);
const std::string& free_alphabet(const RingPtr& ring);
const std::vector<std::string>& free_forbidden(const RingPtr& ring);
std::size_t free_degree_bound(const RingPtr& ring);

/// Single term coeff * word; the word is normalized (possibly to 0).
Elem free_word(const RingPtr& ring, const std::string& word,
               const BigInt& coeff = 1);

/// Accumulates raw terms, rewriting each word to normal form.
Elem free_from_terms(const RingPtr& ring,
                     const std::vector<std::pair<std::string, BigInt>>& terms);

const FreeTermMap& free_terms(const Elem& a);

/// Rewrites every stored term; idempotent (construction already normalizes,
/// so this is the identity on well-formed elements).
Elem free_normal_form(const Elem& a);

/// The endomorphism sending an element to the constant term of its normal
/// form.
EndoMap free_const_term_endo(const RingPtr& ring);

struct IndependenceResult {
  bool is_zero_combo = false;
  bool forces_zero = false;
};

/// Computes a u + b v over Z<u,v> and reports whether the combination is
/// zero and whether (a, b) = (0, 0); zero combination forcing a zero pair is
/// the left-independence witness for the pair (u, v).
IndependenceResult left_independence_uv(const Elem& a, const Elem& b);

/// Z<u,v>[x; const_term], the Ore-extension presentation of the quotient
/// ring Z<u,v,x>/(xu, xv).
OreRingPtr ex113_ore_ring(unsigned law_check_count = 100);

/// The isomorphism from the quotient onto the skew polynomial ring: a normal
/// monomial w x^k, with w over {u, v}, maps to (coefficient w) x^k.
OrePoly ex113_iso(const Elem& p, const OreRingPtr& target);

/// Inverse direction, onto degree-bounded elements of the quotient.
Elem ex113_iso_inv(const OrePoly& p, const RingPtr& quotient);

}  // namespace orelab

#endif  // ORELAB_FREE_RING_HPP
