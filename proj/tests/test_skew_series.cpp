#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orelab/ring_factory.hpp"
#include "orelab/rings_basic.hpp"
#include "orelab/sequence_ring.hpp"
#include "orelab/skew_series.hpp"

using namespace orelab;

namespace {

// independent oracle for sigma = id: plain truncated convolution
SkewSeries naive_untwisted_mul(const SkewSeries& p, const SkewSeries& q) {
  const RingPtr& base = p.base();
  std::vector<Elem> out(p.precision(), base->zero());
  for (unsigned i = 0; i < p.precision(); ++i)
    for (unsigned j = 0; i + j < p.precision(); ++j)
      out[i + j] = out[i + j] + p.coeffs()[i] * q.coeffs()[j];
  return SkewSeries(p.base(), p.sigma(), p.precision(), std::move(out));
}

}  // namespace

TEST_CASE("series product matches the untwisted convolution oracle") {
  RingPtr z2 = mod_ring(2);
  EndoMap id = identity_endo(z2);
  // (1 + x)^2 = 1 + x^2 in characteristic 2
  SkewSeries p(z2, id, 4, {z2->one(), z2->one()});
  SkewSeries sq = series_mul(p, p);
  SkewSeries expect(z2, id, 4, {z2->one(), z2->zero(), z2->one()});
  CHECK(series_eq(sq, expect));
  CHECK(series_eq(sq, naive_untwisted_mul(p, p)));

  Rng rng(0);
  for (int t = 0; t < 100; ++t) {
    SkewSeries a = sample_series(z2, id, 6, rng, false);
    SkewSeries b = sample_series(z2, id, 6, rng, false);
    CHECK(series_eq(series_mul(a, b), naive_untwisted_mul(a, b)));
  }
}

TEST_CASE("the shift twist moves sequence entries across x") {
  RingPtr pz2 = seq_ring(mod_ring(2));
  EndoMap shift = seq_shift_endo(pz2);
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    Elem r = pz2->sample(rng);
    SkewSeries x = SkewSeries::variable(pz2, shift, 6);
    SkewSeries c = SkewSeries::constant(pz2, shift, 6, r);
    SkewSeries shifted = SkewSeries::constant(pz2, shift, 6, shift(r));
    // x r = sigma(r) x
    CHECK(series_eq(series_mul(x, c), series_mul(shifted, x), 8));
  }
}

TEST_CASE("series are unital and associative on seeded triples") {
  RingPtr z4 = mod_ring(4);
  EndoMap id = identity_endo(z4);
  RingPtr pz2 = seq_ring(mod_ring(2));
  EndoMap shift = seq_shift_endo(pz2);
  struct Config {
    RingPtr ring;
    EndoMap sigma;
  };
  std::vector<Config> configs = {{z4, id}, {pz2, shift}};
  for (const auto& cfg : configs) {
    SkewSeries one = SkewSeries::unit(cfg.ring, cfg.sigma, 5);
    Rng rng(0);
    for (int t = 0; t < 200; ++t) {
      SkewSeries a = sample_series(cfg.ring, cfg.sigma, 5, rng, false);
      SkewSeries b = sample_series(cfg.ring, cfg.sigma, 5, rng, false);
      SkewSeries c = sample_series(cfg.ring, cfg.sigma, 5, rng, false);
      CHECK(series_eq(series_mul(a, one), a, 8));
      CHECK(series_eq(series_mul(one, a), a, 8));
      CHECK(series_eq(series_mul(series_mul(a, b), c),
                      series_mul(a, series_mul(b, c)), 8));
    }
  }
}

TEST_CASE("mixed precision and mixed twist are rejected") {
  RingPtr z4 = mod_ring(4);
  EndoMap id = identity_endo(z4);
  SkewSeries a = SkewSeries::unit(z4, id, 4);
  SkewSeries b = SkewSeries::unit(z4, id, 5);
  CHECK_THROWS_AS(series_mul(a, b), PrecisionMismatchError);

  RingPtr zy = poly_ring(integer_ring());
  SkewSeries c = SkewSeries::unit(zy, identity_endo(zy), 4);
  SkewSeries d = SkewSeries::unit(zy, poly_const_term(zy), 4);
  CHECK_THROWS_AS(series_mul(c, d), PrecisionMismatchError);
}

TEST_CASE("idempotent solver forces the unit, coefficient by coefficient") {
  RingPtr z4 = mod_ring(4);
  IdempotentSolveResult res =
      idempotent_constant_one_solve(z4, identity_endo(z4), 8);
  CHECK(res.report.passed());
  CHECK(series_eq(res.solution, SkewSeries::unit(z4, identity_endo(z4), 8)));

  RingPtr pz2 = seq_ring(mod_ring(2));
  IdempotentSolveResult res2 =
      idempotent_constant_one_solve(pz2, seq_shift_endo(pz2), 4, 8);
  CHECK(res2.report.passed());
  // independent re-check that the solution squares to itself
  CHECK(series_eq(series_mul(res2.solution, res2.solution), res2.solution, 8));
}

TEST_CASE("exhaustive enumeration at small precision finds only the unit") {
  RingPtr z2 = mod_ring(2);
  EndoMap id = identity_endo(z2);
  auto found = enumerate_idempotents_constant_one(z2, id, 3);
  REQUIRE(found.size() == 1);
  CHECK(series_eq(found[0], SkewSeries::unit(z2, id, 3)));

  // hand-rolled double check over all four tails (r1, r2)
  unsigned idempotents = 0;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 2; ++r2) {
      SkewSeries e(z2, id, 3,
                   {z2->one(), z2->from_int(r1), z2->from_int(r2)});
      if (series_eq(series_mul(e, e), e)) ++idempotents;
    }
  CHECK(idempotents == 1);

  // same statement over Z/2 and Z/4 up to precision 4, and over sequences
  RingPtr z4 = mod_ring(4);
  for (unsigned prec = 2; prec <= 4; ++prec) {
    for (const RingPtr& ring : {z2, z4}) {
      auto all = enumerate_idempotents_constant_one(ring, identity_endo(ring),
                                                    prec);
      REQUIRE(all.size() == 1);
      CHECK(series_eq(all[0],
                      SkewSeries::unit(ring, identity_endo(ring), prec)));
    }
  }
  RingPtr pz2 = seq_ring(z2);
  IdempotentSolveResult seqres =
      idempotent_constant_one_solve(pz2, seq_shift_endo(pz2), 4, 8);
  CHECK(seqres.report.passed());

  CHECK_THROWS_AS(
      enumerate_idempotents_constant_one(z2, id, 30, /*budget=*/100),
      BudgetExceededError);
}

TEST_CASE("right inverse by coefficient recursion") {
  RingPtr z = integer_ring();
  EndoMap id = identity_endo(z);
  // (1 - x)^{-1} = 1 + x + x^2 + x^3 + x^4
  SkewSeries p(z, id, 5, {z->one(), -z->one()});
  SkewSeries q = right_inverse(p);
  SkewSeries geo(z, id, 5,
                 {z->one(), z->one(), z->one(), z->one(), z->one()});
  CHECK(series_eq(q, geo));
  CHECK(series_eq(series_mul(p, q), SkewSeries::unit(z, id, 5)));

  // the unit inverts to itself
  CHECK(series_eq(right_inverse(SkewSeries::unit(z, id, 5)),
                  SkewSeries::unit(z, id, 5)));

  // twisted case: p = 1 - a x over sequences, q_k = a sigma(a) ... ;
  // with a = (1,0,1,0,...) the second factor already vanishes
  RingPtr pz2 = seq_ring(mod_ring(2));
  RingPtr b = seq_base(pz2);
  EndoMap shift = seq_shift_endo(pz2);
  Elem a = seq_make(pz2, {}, {b->one(), b->zero()});
  SkewSeries pa(pz2, shift, 5, {pz2->one(), -a});
  SkewSeries qa = right_inverse(pa);
  CHECK(pz2->eq_window(qa.coeffs()[1], a, 8));
  CHECK(pz2->eq_window(qa.coeffs()[2], a * shift(a), 8));
  CHECK(pz2->eq_window(qa.coeffs()[2], pz2->zero(), 8));
  CHECK(series_eq(series_mul(pa, qa), SkewSeries::unit(pz2, shift, 5), 8));

  // sampled inverses stay inverses
  Rng rng(0);
  for (int t = 0; t < 200; ++t) {
    SkewSeries s = sample_series(pz2, shift, 6, rng, true);
    CHECK(series_eq(series_mul(s, right_inverse(s)),
                    SkewSeries::unit(pz2, shift, 6), 8));
  }

  SkewSeries bad(z, id, 4, {z->from_int(2)});
  CHECK_THROWS_AS(right_inverse(bad), Error);
}

TEST_CASE("inverse pairs transport to two-sided inverses") {
  RingPtr z = integer_ring();
  EndoMap id = identity_endo(z);
  SkewSeries p(z, id, 6, {z->one(), -z->one()});
  Report r = direct_finiteness_instance(p, right_inverse(p), true);
  CHECK(r.passed());

  RingPtr m2 = matrix_ring(mod_ring(2), 2);
  EndoMap mid = identity_endo(m2);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    SkewSeries s = sample_series(m2, mid, 8, rng, true);
    Report rep = direct_finiteness_instance(s, right_inverse(s), true, 8);
    CHECK(rep.passed());
  }

  // mismatched pair violates the precondition
  SkewSeries not_inverse = SkewSeries::unit(z, id, 6);
  SkewSeries two = SkewSeries::constant(z, id, 6, z->from_int(2));
  CHECK_THROWS_AS(direct_finiteness_instance(two, not_inverse, true), Error);
}

TEST_CASE("matrix of series exchanges with series of matrices") {
  RingPtr z2 = mod_ring(2);
  EndoMap id = identity_endo(z2);

  MatrixOfSeries idmat = mos_identity(z2, id, 5, 2);
  SkewSeries s = matrix_series_iso(idmat);
  CHECK(series_eq(s, SkewSeries::unit(s.base(), s.sigma(), 5)));

  Report r = matrix_series_iso_check(z2, id, 2, 8, 0, 50);
  CHECK(r.passed());

  // coefficient-level spot check: coefficient 1 of the image at (0,1) is
  // the coefficient 1 of entry (0,1)
  Rng rng(2);
  MatrixOfSeries a = sample_mos(z2, id, 6, 2, rng);
  SkewSeries img = matrix_series_iso(a);
  CHECK(z2->eq(matrix_entry(img.coeffs()[1], 0, 1),
               a.at(0, 1).coeffs()[1]));

  // the inverse direction restores the matrix
  MatrixOfSeries back = matrix_series_iso_inv(img, id);
  CHECK(mos_eq(back, a));
}
