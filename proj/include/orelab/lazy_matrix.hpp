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

#ifndef ORELAB_LAZY_MATRIX_HPP
#define ORELAB_LAZY_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "orelab/morphisms.hpp"
#include "orelab/report.hpp"
#include "orelab/ring.hpp"
#include "orelab/sequence_ring.hpp"
#include "orelab/skew_series.hpp"

namespace orelab {

/// An N x N matrix over a base ring, given by an entry oracle together with
/// a finite row-support oracle (columns outside the support of a row are
/// zero), so products are exact finite sums. A column-support oracle, when
/// present, makes the transpose computable; both supports may soundly
/// over-approximate. Entry oracles must be pure.
struct LazyMatrix {
  RingPtr base;
  std::function<Elem(std::size_t, std::size_t)> entry;
  std::function<std::vector<std::size_t>(std::size_t)> row_support;
  std::function<std::vector<std::size_t>(std::size_t)> col_support;  // optional
  bool upper_triangular = false;

  bool valid() const { return base != nullptr; }
  bool has_col_support() const { return static_cast<bool>(col_support); }
};

LazyMatrix lazy_zero(RingPtr base);
LazyMatrix lazy_identity(RingPtr base);

LazyMatrix lazy_add(const LazyMatrix& m, const LazyMatrix& n);
LazyMatrix lazy_mul(const LazyMatrix& m, const LazyMatrix& n);

/// Requires a column-support oracle on the input. This is also the
/// lower-triangular mirror: the transpose view of an upper-triangular
/// matrix is the whole lower-triangular story, so no parallel type exists.
LazyMatrix lazy_transpose(const LazyMatrix& m);

/// Compares the leading w x w corner.
bool lazy_window_eq(const LazyMatrix& m, const LazyMatrix& n, unsigned w);

/// Renders the leading corner, for diagnostics.
std::string lazy_show_window(const LazyMatrix& m, unsigned w);

/// Upper-triangular matrix stored as finitely many superdiagonal bands;
/// band j holds the sequence (M(i, i+j))_i as an element of P(base).
struct BandedMatrix {
  RingPtr base;
  RingPtr seqring;                        // P(base)
  std::map<std::size_t, Elem> diagonals;  // band index -> sequence element
};

BandedMatrix banded_make(RingPtr base, std::map<std::size_t, Elem> diagonals);
BandedMatrix banded_zero(RingPtr base);
BandedMatrix banded_identity(RingPtr base);
/// Band j filled with the constant-1 sequence.
BandedMatrix banded_ones_band(RingPtr base, std::size_t j);
BandedMatrix banded_add(const BandedMatrix& m, const BandedMatrix& n);
Elem banded_entry(const BandedMatrix& m, std::size_t i, std::size_t j);
LazyMatrix banded_to_lazy(const BandedMatrix& m);
std::size_t banded_max_band(const BandedMatrix& m);

/// Random banded matrix with bands drawn from {0..max_band}.
BandedMatrix sample_banded(const RingPtr& base, Rng& rng,
                           std::size_t max_band = 3);

/// The doubling and interleaving pattern matrices A (A(i,2i)=1) and
/// B (B(i,2i+1)=1), together with a report verifying
/// A A^t = B B^t = I and A B^t = B A^t = 0 on the window.
struct PatternWitnesses {
  LazyMatrix A;
  LazyMatrix B;
  Report report;
};
PatternWitnesses lemma13_witnesses(const RingPtr& base, unsigned window = 32);

/// From Z = X A + Y B, recovers (Z A^t, Z B^t) = (X, Y); exactness of this
/// recovery on windows is the left-independence witness for (A, B).
std::pair<LazyMatrix, LazyMatrix> recover_coefficients(const LazyMatrix& z,
                                                       const LazyMatrix& a,
                                                       const LazyMatrix& b);

/// The down-right shift endomorphism on upper-triangular matrices:
/// sigma(M)(0,0) = M(0,0), zero elsewhere on row and column 0, and
/// sigma(M)(i,j) = M(i-1,j-1) for i,j > 0.
LazyMatrix umat_shift_apply(const LazyMatrix& m);

/// Samples banded matrices and verifies the shift respects +, *, fixes I,
/// and is injective on windows.
Report umat_shift_check(const RingPtr& base, std::uint64_t seed,
                        unsigned count, unsigned window = 16);

/// Band-reading map into skew series over P(base) with the shift twist:
/// coefficient j of theta(M) is band j. Requires max band < precision.
SkewSeries theta(const BandedMatrix& m, unsigned precision);

/// Inverse direction on the banded subclass: a series over P(base) with the
/// shift twist maps back to the matrix whose band j is coefficient j.
BandedMatrix theta_inverse(const SkewSeries& s);

/// Samples banded pairs and verifies theta(M+N) = theta(M) + theta(N) and
/// theta(M N) = theta(M) theta(N), reading the product side off exact lazy
/// products on the window.
Report theta_check(const RingPtr& base, std::uint64_t seed, unsigned count,
                   unsigned precision = 8, unsigned window = 8,
                   std::size_t max_band = 4);

/// The invertibility transport pipeline: p = theta(I + superdiagonal of 1s),
/// q = right_inverse(p) at the stated precision, check p q = q p = 1, then
/// pull q back through theta^{-1} and re-check both products as matrices on
/// the window. `base_directly_finite` is the caller's assertion (brute-check
/// it upstream for enumerable bases).
Report umat_direct_finiteness_demo(const RingPtr& base, unsigned precision,
                                   bool base_directly_finite,
                                   unsigned window = 8);

/// UM_N(base) as a ring handle with windowed equality; elements are
/// upper-triangular lazy matrices.
RingPtr umat_ring(RingPtr base);
bool is_umat_ring(const RingPtr& ring);
RingPtr umat_base(const RingPtr& ring);
const LazyMatrix& umat_matrix(const Elem& e);
Elem umat_elem(const RingPtr& ring, LazyMatrix m);
Elem umat_from_banded(const RingPtr& ring, const BandedMatrix& m);

/// The down-right shift as an EndoMap on UMat(base).
EndoMap umat_shift_endo(const RingPtr& ring);

}  // namespace orelab

#endif  // ORELAB_LAZY_MATRIX_HPP
