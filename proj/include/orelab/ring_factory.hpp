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

#ifndef ORELAB_RING_FACTORY_HPP
#define ORELAB_RING_FACTORY_HPP

#include <string>

#include "orelab/morphisms.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// Builds a ring handle from a descriptor string. Grammar:
///
///   Z                      integers
///   Z/<n>                  integers mod n, n >= 1
///   Poly(<ring>,y)         polynomials in a central y
///   M<k>(<ring>)           k x k matrices
///   P(<ring>)              sequences (prefix + eventually periodic tail)
///   Free(u,v)              free ring on u, v
///   Free(u,v,x|xu=0,xv=0)  quotient by annihilating relations
///   Laurent(<ring>,prec=<N>)  truncated Laurent series
///   UMat(<ring>)           upper-triangular N x N matrices
///
/// Repeated calls with the same canonical descriptor return the same handle.
/// Throws ParseError on malformed input and Error on unsupported parameters
/// (for example Z/0).
RingPtr make_ring(const std::string& descriptor);

/// Named maps compatible with a given ring. Endomorphisms: "id" (any ring),
/// "const_term" (polynomials and free rings), "y_negate" (polynomials),
/// "shift" (sequence rings), "laurent_square" (Laurent rings), "umat_shift"
/// (UMat rings), "inner" (enumerable matrix rings; conjugation by a
/// seed-sampled invertible element), "entrywise(<name>)" (matrix rings,
/// lifting a base-ring map). Throws on unknown names or ring mismatches.
EndoMap builtin_endo(const std::string& name, const RingPtr& ring,
                     std::uint64_t seed = 0);

/// Named sigma-derivations: "zero" (any ring; twisted by `sigma` when
/// given), "d_dy" and "coeff_shift" (polynomial rings, carrying their own
/// twists id and const_term respectively).
SigmaDerivation builtin_derivation(const std::string& name,
                                   const RingPtr& ring,
                                   const EndoMap* sigma = nullptr);

/// True when `name` names a derivation rather than an endomorphism.
bool builtin_is_derivation(const std::string& name);

}  // namespace orelab

#endif  // ORELAB_RING_FACTORY_HPP
