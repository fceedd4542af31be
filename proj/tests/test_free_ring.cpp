#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "orelab/free_ring.hpp"
#include "orelab/ring_factory.hpp"

using namespace orelab;

TEST_CASE("annihilating rewrites produce unique normal forms") {
  RingPtr s = free_ring_uvx_rel();
  CHECK(s->eq(free_word(s, "xu"), s->zero()));
  CHECK(s->eq(free_word(s, "xv"), s->zero()));
  CHECK(s->eq(free_word(s, "x") * free_word(s, "uv"), s->zero()));
  CHECK(s->eq(free_word(s, "u") * free_word(s, "x"), free_word(s, "ux")));

  // normal_form is idempotent and agrees with construction
  Rng rng(0);
  for (int t = 0; t < 100; ++t) {
    Elem p = s->sample(rng);
    CHECK(s->eq(free_normal_form(p), p));
  }

  // the rewrite result does not depend on how the element was accumulated
  std::vector<std::pair<std::string, BigInt>> terms = {
      {"xu", 3}, {"ux", 2}, {"xv", -1}, {"uv", 1}, {"", 4}};
  Elem forward = free_from_terms(s, terms);
  std::reverse(terms.begin(), terms.end());
  Elem backward = free_from_terms(s, terms);
  CHECK(s->eq(forward, backward));
  CHECK(free_terms(forward).size() == 3);  // ux, uv, constant survive
}

TEST_CASE("words obey the degree cap") {
  RingPtr r = free_ring_uv();
  Elem u5 = free_word(r, "uuuuu");
  Elem u4 = free_word(r, "uuuu");
  CHECK_THROWS_AS(u5 * u4, DegreeBoundError);
  CHECK_THROWS_AS(free_word(r, "uvuvuvuvu"), DegreeBoundError);
}

TEST_CASE("the constant-term endomorphism") {
  RingPtr r = free_ring_uv();
  EndoMap sigma = free_const_term_endo(r);
  // sigma(3uv + u + 2) = 2
  Elem p = free_from_terms(r, {{"uv", 3}, {"u", 1}, {"", 2}});
  CHECK(r->eq(sigma(p), r->from_int(2)));
  CHECK(r->eq(sigma(r->one()), r->one()));

  Rng rng(0);
  for (int t = 0; t < 100; ++t) {
    Elem a = r->sample(rng);
    Elem b = r->sample(rng);
    CHECK(r->eq(sigma(a * b), sigma(a) * sigma(b)));
    CHECK(r->eq(sigma(a + b), sigma(a) + sigma(b)));
  }
}

TEST_CASE("x annihilates every nonempty u,v word and commutes with ints") {
  RingPtr s = free_ring_uvx_rel();
  Elem x = free_word(s, "x");
  // exhaustive over words of length 1..4
  std::vector<std::string> words = {""};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words)
      if (w.size() == static_cast<std::size_t>(len) - 1) {
        next.push_back(w + "u");
        next.push_back(w + "v");
      }
    for (const auto& w : next) {
      CHECK(s->eq(x * free_word(s, w), s->zero()));
      words.push_back(w);
    }
  }
  for (int c = -3; c <= 3; ++c) {
    Elem cc = s->from_int(c);
    CHECK(s->eq(x * cc, cc * x));
  }
}

TEST_CASE("the quotient embeds into the skew polynomial ring") {
  RingPtr s = free_ring_uvx_rel();
  OreRingPtr ore = ex113_ore_ring(100);
  RingPtr r = free_ring_uv();

  // uvx^2 maps to the monomial (uv) x^2
  Elem p = free_word(s, "uvxx");
  OrePoly img = ex113_iso(p, ore);
  CHECK(img.degree() == 2);
  CHECK(r->eq(img.coeff_at(2), free_word(r, "uv")));
  CHECK(r->eq(img.coeff_at(0), r->zero()));

  // x u vanishes on both sides of the identification
  CHECK(s->eq(free_word(s, "x") * free_word(s, "u"), s->zero()));
  CHECK(ore_mul(OrePoly::variable(ore),
                OrePoly::constant(ore, free_word(r, "u")))
            .is_zero());

  Rng rng(0);
  for (int t = 0; t < 100; ++t) {
    Elem a = s->sample(rng);
    Elem b = s->sample(rng);
    CHECK(ore_eq(ex113_iso(a * b, ore),
                 ore_mul(ex113_iso(a, ore), ex113_iso(b, ore))));
    CHECK(ore_eq(ex113_iso(a + b, ore),
                 ore_add(ex113_iso(a, ore), ex113_iso(b, ore))));
    CHECK(s->eq(ex113_iso_inv(ex113_iso(a, ore), s), a));
  }
}

TEST_CASE("left independence of (u, v) on explicit pairs") {
  RingPtr r = free_ring_uv();
  IndependenceResult zero = left_independence_uv(r->zero(), r->zero());
  CHECK(zero.is_zero_combo);
  CHECK(zero.forces_zero);

  // v u - u v does not cancel
  IndependenceResult mixed =
      left_independence_uv(free_word(r, "v"), -free_word(r, "u"));
  CHECK_FALSE(mixed.is_zero_combo);
  CHECK_FALSE(mixed.forces_zero);

  // direct exhaustive check at degree <= 1, coefficients in {-1,0,1}
  std::vector<std::string> words = {"", "u", "v"};
  std::vector<Elem> polys;
  for (int c0 = -1; c0 <= 1; ++c0)
    for (int c1 = -1; c1 <= 1; ++c1)
      for (int c2 = -1; c2 <= 1; ++c2)
        polys.push_back(free_from_terms(
            r, {{words[0], c0}, {words[1], c1}, {words[2], c2}}));
  unsigned zero_combos = 0;
  for (const auto& a : polys)
    for (const auto& b : polys) {
      IndependenceResult res = left_independence_uv(a, b);
      if (res.is_zero_combo) {
        ++zero_combos;
        CHECK(res.forces_zero);
      }
    }
  CHECK(zero_combos == 1);
}

TEST_CASE("serialization is canonical") {
  RingPtr r = free_ring_uv();
  Elem p = free_from_terms(r, {{"uv", 2}, {"", -1}});
  Elem q = free_from_terms(r, {{"", -1}, {"uv", 2}});
  CHECK(r->key(p) == r->key(q));
  CHECK(r->show(p) == "2*uv - 1");
}
