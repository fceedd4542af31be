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

#ifndef ORELAB_SKEW_SERIES_HPP
#define ORELAB_SKEW_SERIES_HPP

#include <vector>

#include "orelab/morphisms.hpp"
#include "orelab/report.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// A skew power series truncated at x^N: coefficients [r_0 .. r_{N-1}] over
/// a base ring twisted by sigma, multiplying by
///   (sum a_i x^i)(sum b_j x^j) = sum a_i sigma^i(b_j) x^{i+j}   (mod x^N).
/// Precision is part of the value; operations across precisions or across
/// different (base, sigma) pairs are errors, never coercions.
class SkewSeries {
 public:
  SkewSeries() = default;
  SkewSeries(RingPtr base, EndoMap sigma, unsigned precision,
             std::vector<Elem> coeffs);

  static SkewSeries zeros(RingPtr base, EndoMap sigma, unsigned precision);
  static SkewSeries unit(RingPtr base, EndoMap sigma, unsigned precision);
  static SkewSeries constant(RingPtr base, EndoMap sigma, unsigned precision,
                             const Elem& r);
  static SkewSeries variable(RingPtr base, EndoMap sigma, unsigned precision);

  bool valid() const { return base_ != nullptr; }
  const RingPtr& base() const { return base_; }
  const EndoMap& sigma() const { return sigma_; }
  unsigned precision() const { return precision_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  const Elem& coeff_at(unsigned k) const { return coeffs_.at(k); }

 private:
  RingPtr base_;
  EndoMap sigma_;
  unsigned precision_ = 0;
  std::vector<Elem> coeffs_;
};

SkewSeries series_add(const SkewSeries& p, const SkewSeries& q);
SkewSeries series_neg(const SkewSeries& p);
SkewSeries series_sub(const SkewSeries& p, const SkewSeries& q);
SkewSeries series_mul(const SkewSeries& p, const SkewSeries& q);

/// Coefficientwise comparison mod x^N; `window` applies to windowed bases.
bool series_eq(const SkewSeries& p, const SkewSeries& q, unsigned window = 16);

std::string series_show(const SkewSeries& p);
nlohmann::json series_to_json(const SkewSeries& p);

/// Random series; with `unit_constant`, the constant term is forced to 1.
SkewSeries sample_series(const RingPtr& base, const EndoMap& sigma,
                         unsigned precision, Rng& rng, bool unit_constant);

struct IdempotentSolveResult {
  SkewSeries solution;
  Report report;
};

/// Solves e^2 = e subject to e_0 = 1 coefficient by coefficient. At each
/// index the equation collapses to e_k = 2 e_k + (cross terms in earlier
/// coefficients), forcing e_k; the report records the forcing step for each
/// k, verifies idempotence of the result, and confirms the solution is 1.
IdempotentSolveResult idempotent_constant_one_solve(const RingPtr& base,
                                                    const EndoMap& sigma,
                                                    unsigned precision,
                                                    unsigned window = 16);

/// Exhaustive search over all coefficient tails (enumerable bases): returns
/// every idempotent with constant term 1 at the given precision. Candidate
/// count is |R|^(N-1) and must fit the budget.
std::vector<SkewSeries> enumerate_idempotents_constant_one(
    const RingPtr& base, const EndoMap& sigma, unsigned precision,
    std::uint64_t budget = 1000000, unsigned window = 16);

/// For p with unit constant term, the unique q with p q = 1 mod x^N, by the
/// recursion q_k = -sum_{i>=1} p_i sigma^i(q_{k-i}).
SkewSeries right_inverse(const SkewSeries& p);

/// Given an inverse pair p q = 1 mod x^N, forms e = q p, checks e^2 = e and
/// the constant term, and (when the base is directly finite, asserted by the
/// caller or brute-checked upstream) checks q p = 1 mod x^N.
Report direct_finiteness_instance(const SkewSeries& p, const SkewSeries& q,
                                  bool base_directly_finite,
                                  unsigned window = 16);

/// An n x n matrix of equal-shape skew series; the domain of the
/// matrix/series exchange isomorphism.
struct MatrixOfSeries {
  unsigned n = 0;
  std::vector<SkewSeries> entries;  // row-major, n*n

  const SkewSeries& at(unsigned i, unsigned j) const {
    return entries.at(std::size_t(i) * n + j);
  }
};

MatrixOfSeries mos_add(const MatrixOfSeries& a, const MatrixOfSeries& b);
MatrixOfSeries mos_mul(const MatrixOfSeries& a, const MatrixOfSeries& b);
MatrixOfSeries mos_identity(const RingPtr& base, const EndoMap& sigma,
                            unsigned precision, unsigned n);
MatrixOfSeries sample_mos(const RingPtr& base, const EndoMap& sigma,
                          unsigned precision, unsigned n, Rng& rng);
bool mos_eq(const MatrixOfSeries& a, const MatrixOfSeries& b,
            unsigned window = 16);

/// Reads an n x n matrix of series as one series over M_n(base) with the
/// entrywise-lifted twist: coefficient k of the image is the matrix of k-th
/// coefficients. Bijective by construction.
SkewSeries matrix_series_iso(const MatrixOfSeries& a);

/// Inverse direction; `inner_sigma` is the entry-level twist.
MatrixOfSeries matrix_series_iso_inv(const SkewSeries& s,
                                     const EndoMap& inner_sigma);

/// Samples pairs and verifies the exchange map respects +, * and 1.
Report matrix_series_iso_check(const RingPtr& base, const EndoMap& sigma,
                               unsigned n, unsigned precision,
                               std::uint64_t seed, unsigned count,
                               unsigned window = 16);

}  // namespace orelab

#endif  // ORELAB_SKEW_SERIES_HPP
