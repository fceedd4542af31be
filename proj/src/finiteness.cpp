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

#include "orelab/finiteness.hpp"

#include "orelab/ore_poly.hpp"
#include "orelab/rings_basic.hpp"

namespace orelab {

nlohmann::json FinitenessReport::to_json() const {
  nlohmann::json j;
  j["ring"] = ring;
  j["property"] = property;
  j["verdict"] = verdict == Verdict::Holds
                     ? "holds"
                     : (verdict == Verdict::Fails ? "fails" : "inconclusive");
  j["pairs_checked"] = pairs_checked;
  if (witness) {
    j["witness"] = nlohmann::json{
        {"r", witness->first.ring().show(witness->first)},
        {"s", witness->second.ring().show(witness->second)}};
  }
  return j;
}

std::string FinitenessReport::pretty() const {
  std::string s = ring + " " + property + ": ";
  switch (verdict) {
    case Verdict::Holds:
      s += "holds (" + std::to_string(pairs_checked) + " pairs)";
      break;
    case Verdict::Fails:
      s += "fails; witness r=" + witness->first.ring().show(witness->first) +
           ", s=" + witness->second.ring().show(witness->second);
      break;
    case Verdict::Inconclusive:
      s += "inconclusive (budget)";
      break;
  }
  return s;
}

FinitenessReport directly_finite_brute(const RingPtr& ring,
                                       std::uint64_t budget) {
  FinitenessReport rep;
  rep.ring = ring->name();
  rep.property = "directly_finite";
  if (!ring->caps().enumerable) throw NotEnumerableError(ring->name());
  std::uint64_t size;
  try {
    size = ring->enum_size();
  } catch (const BudgetExceededError&) {
    rep.verdict = Verdict::Inconclusive;
    return rep;
  }
  if (size != 0 && size > budget / size) {
    rep.verdict = Verdict::Inconclusive;
    return rep;
  }
  Elem one = ring->one();
  for (std::uint64_t i = 0; i < size; ++i) {
    Elem r = ring->enum_at(i);
    for (std::uint64_t j = 0; j < size; ++j) {
      Elem s = ring->enum_at(j);
      ++rep.pairs_checked;
      if (ring->eq(r * s, one) && !ring->eq(s * r, one)) {
        rep.verdict = Verdict::Fails;
        rep.witness = {r, s};
        return rep;
      }
    }
  }
  rep.verdict = Verdict::Holds;
  return rep;
}

FinitenessReport stably_finite_upto(const RingPtr& ring, unsigned n,
                                    std::uint64_t budget) {
  FinitenessReport rep;
  rep.ring = ring->name();
  rep.property = "stably_finite_upto(" + std::to_string(n) + ")";
  rep.verdict = Verdict::Holds;
  for (unsigned k = 1; k <= n; ++k) {
    FinitenessReport level = directly_finite_brute(matrix_ring(ring, k),
                                                   budget);
    rep.pairs_checked += level.pairs_checked;
    if (level.verdict == Verdict::Fails) {
      rep.verdict = Verdict::Fails;
      rep.witness = level.witness;
      return rep;
    }
    if (level.verdict == Verdict::Inconclusive)
      rep.verdict = Verdict::Inconclusive;
  }
  return rep;
}

Report ex116_demo(std::uint64_t seed, unsigned count) {
  Report report("ex116_demo", seed);
  RingPtr zy = poly_ring(integer_ring());
  EndoMap sigma = poly_const_term(zy);
  SigmaDerivation delta = poly_coeff_shift(zy);
  report.set_param("ring", zy->name() + "[x;const_term,coeff_shift]");
  report.set_param("count", count);

  // the demo only means something if delta really is a sigma-derivation
  Report laws = check_sigma_derivation(delta, seed, count);
  report.add("delta_is_sigma_derivation", laws.passed());

  OreRingPtr ore = OreRing::make(zy, sigma, delta, count, seed);
  OrePoly x = OrePoly::variable(ore);
  OrePoly y = OrePoly::constant(ore, poly_var(zy));
  OrePoly one = OrePoly::one(ore);

  OrePoly xy = ore_mul(x, y);
  report.add("xy_equals_1", ore_eq(xy, one), "x*y = " + ore_show(xy));
  OrePoly yx = ore_mul(y, x);
  report.add("yx_not_equal_1", !ore_eq(yx, one), "y*x = " + ore_show(yx));

  Elem y2 = poly_var(zy) * poly_var(zy);
  OrePoly xy2 = ore_mul(x, OrePoly::constant(ore, y2));
  report.add("x_y_squared_equals_y", ore_eq(xy2, y),
             "x*y^2 = " + ore_show(xy2));
  report.add("witness_pair_emitted", true, "r = x, s = y: rs = 1, sr != 1");
  return report;
}

Report skew_poly_finiteness_demo(const RingPtr& base, const EndoMap& sigma,
                                 unsigned precision, bool base_directly_finite,
                                 std::uint64_t seed, unsigned count,
                                 bool check_stable, unsigned window) {
  if (!base_directly_finite)
    throw Error("demo requires a directly finite base (assert or brute-check "
                "upstream)");
  Report report("skew_poly_finiteness_demo", seed);
  report.set_param("ring", base->name());
  report.set_param("sigma", sigma.name());
  report.set_param("precision", precision);
  report.set_param("count", count);
  report.set_param("window", window);
  report.set_param("modulus", "x^" + std::to_string(precision));

  SkewSeries one = SkewSeries::unit(base, sigma, precision);
  unsigned failures = 0;
  std::string w;
  Rng rng(seed);
  for (unsigned i = 0; i < count; ++i) {
    SkewSeries p = sample_series(base, sigma, precision, rng, true);
    SkewSeries q = right_inverse(p);
    if (!series_eq(series_mul(q, p), one, window)) {
      ++failures;
      if (w.empty()) w = "pair index " + std::to_string(i);
    }
  }
  report.add("qp_equals_one_for_sampled_pairs", failures == 0, w);

  if (check_stable) {
    RingPtr mring = matrix_ring(base, 2);
    EndoMap lifted = matrix_entrywise(mring, sigma);
    SkewSeries mone = SkewSeries::unit(mring, lifted, precision);
    unsigned mfailures = 0;
    std::string mw;
    for (unsigned i = 0; i < count; ++i) {
      // route the sample through the matrix-of-series exchange: draw a
      // matrix of series, force the constant matrix to the identity, and
      // read it as one series over M_2(base)
      MatrixOfSeries a = sample_mos(base, sigma, precision, 2, rng);
      SkewSeries p = matrix_series_iso(a);
      std::vector<Elem> coeffs = p.coeffs();
      coeffs[0] = mring->one();
      p = SkewSeries(mring, lifted, precision, std::move(coeffs));
      SkewSeries q = right_inverse(p);
      if (!series_eq(series_mul(q, p), mone, window)) {
        ++mfailures;
        if (mw.empty()) mw = "pair index " + std::to_string(i);
      }
    }
    report.add("qp_equals_one_over_M2_via_iso", mfailures == 0, mw);
  }
  return report;
}

}  // namespace orelab
