#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orelab/laurent_ring.hpp"
#include "orelab/morphisms.hpp"
#include "orelab/ring_factory.hpp"
#include "orelab/rings_basic.hpp"
#include "orelab/sequence_ring.hpp"

using namespace orelab;

TEST_CASE("make_ring builds the documented handles") {
  RingPtr z4 = make_ring("Z/4");
  CHECK(z4->caps().enumerable);
  CHECK(z4->caps().exact_equality);
  CHECK(z4->enum_size() == 4);
  CHECK(z4->caps().characteristic == 4);

  RingPtr m2 = make_ring("M2(Z/2)");
  CHECK(m2->caps().enumerable);
  CHECK(m2->enum_size() == 16);

  RingPtr pz2 = make_ring("P(Z/2)");
  CHECK_FALSE(pz2->caps().exact_equality);
  CHECK_FALSE(pz2->caps().enumerable);

  RingPtr z = make_ring("Z");
  CHECK(z->caps().exact_equality);
  CHECK_FALSE(z->caps().enumerable);
  CHECK(z->caps().characteristic == 0);

  CHECK_FALSE(make_ring("Laurent(Z/2,prec=8)")->caps().exact_equality);
  CHECK_FALSE(make_ring("UMat(Z/2)")->caps().exact_equality);

  // same descriptor, same handle
  CHECK(make_ring("Poly(Z,y)").get() == make_ring("Poly(Z,y)").get());
}

TEST_CASE("make_ring rejects malformed and unsupported descriptors") {
  CHECK_THROWS_AS(make_ring("Q"), ParseError);
  CHECK_THROWS_AS(make_ring("Z/"), ParseError);
  CHECK_THROWS_AS(make_ring("Poly(Z)"), ParseError);
  CHECK_THROWS_AS(make_ring("Z/4 junk"), ParseError);
  CHECK_THROWS_AS(make_ring("Z/0"), Error);
  CHECK_THROWS_AS(make_ring("M0(Z)"), Error);
  CHECK_THROWS_AS(make_ring("Laurent(Z/2,prec=0)"), Error);
}

TEST_CASE("elements refuse to mix ring handles") {
  RingPtr z = integer_ring();
  RingPtr z4 = mod_ring(4);
  CHECK_THROWS_AS(z->one() + z4->one(), RingMismatchError);
  CHECK(mod_value(z4->from_int(-1)) == 3);
}

TEST_CASE("ring axioms pass for every registered ring at seeds 0..4") {
  std::vector<std::string> specs = {
      "Z",      "Z/2",          "Z/4",
      "M2(Z/2)", "Poly(Z,y)",    "P(Z/2)",
      "Free(u,v)", "Free(u,v,x|xu=0,xv=0)", "Laurent(Z/2,prec=8)"};
  for (const auto& spec : specs) {
    RingPtr ring = make_ring(spec);
    for (std::uint64_t seed = 0; seed <= 4; ++seed) {
      Report r = ring_axioms_check(ring, seed, 200);
      CAPTURE(spec);
      CAPTURE(seed);
      CHECK(r.passed());
    }
  }
  // the lazy-matrix ring compares on a smaller window to stay quick
  RingPtr um = make_ring("UMat(Z/2)");
  for (std::uint64_t seed = 0; seed <= 4; ++seed)
    CHECK(ring_axioms_check(um, seed, 200, 6).passed());
}

namespace {

// deliberately broken ring: multiplication is subtraction, which is neither
// associative nor unital
class BrokenRing final : public Ring {
 public:
  BrokenRing() : Ring("broken", RingCaps{true, true, 7}) {}
  Elem wrap(std::uint64_t v) const {
    return make(std::make_shared<std::uint64_t>(v));
  }
  std::uint64_t value(const Elem& a) const { return a.payload<std::uint64_t>(); }
  Elem zero() const override { return wrap(0); }
  Elem one() const override { return wrap(1); }
  Elem add(const Elem& a, const Elem& b) const override {
    return wrap((value(a) + value(b)) % 7);
  }
  Elem neg(const Elem& a) const override {
    return wrap((7 - value(a)) % 7);
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    return wrap((value(a) + 7 - value(b)) % 7);
  }
  bool eq(const Elem& a, const Elem& b) const override {
    return value(a) == value(b);
  }
  Elem sample(Rng& rng) const override { return wrap(rng.below(7)); }
  std::string show(const Elem& a) const override {
    return std::to_string(value(a));
  }
};

}  // namespace

TEST_CASE("the axiom checker flags a non-associative test double") {
  RingPtr broken = std::make_shared<BrokenRing>();
  Report r = ring_axioms_check(broken, 1, 100);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("mul_associative") != nullptr);
  CHECK_FALSE(r.find("mul_associative")->pass);
  // addition is fine in the double
  CHECK(r.find("add_associative")->pass);
}

TEST_CASE("catalog endomorphisms pass their law checks at seeds 0..4") {
  struct Case {
    std::string spec;
    std::string name;
  };
  std::vector<Case> cases = {
      {"Z", "id"},
      {"Poly(Z,y)", "const_term"},
      {"Poly(Z,y)", "y_negate"},
      {"Free(u,v)", "const_term"},
      {"P(Z/2)", "shift"},
      {"Laurent(Z/2,prec=8)", "laurent_square"},
      {"M2(Z/2)", "inner"},
      {"M2(Z/2)", "entrywise(id)"},
  };
  for (const auto& c : cases) {
    RingPtr ring = make_ring(c.spec);
    EndoMap sigma = builtin_endo(c.name, ring, 1);
    for (std::uint64_t seed = 0; seed <= 4; ++seed) {
      CAPTURE(c.spec);
      CAPTURE(c.name);
      CHECK(check_endomorphism(sigma, seed, 200).passed());
    }
  }
  RingPtr um = make_ring("UMat(Z/2)");
  EndoMap shift = builtin_endo("umat_shift", um);
  for (std::uint64_t seed = 0; seed <= 4; ++seed)
    CHECK(check_endomorphism(shift, seed, 60, 8).passed());
}

TEST_CASE("catalog derivations pass their law checks at seeds 0..4") {
  RingPtr zy = make_ring("Poly(Z,y)");
  for (std::uint64_t seed = 0; seed <= 4; ++seed) {
    CHECK(check_sigma_derivation(builtin_derivation("d_dy", zy), seed, 200)
              .passed());
    CHECK(check_sigma_derivation(builtin_derivation("coeff_shift", zy), seed,
                                 200)
              .passed());
    CHECK(check_sigma_derivation(builtin_derivation("zero", zy), seed, 200)
              .passed());
  }
}

TEST_CASE("a shifted-by-one map is flagged as non-additive") {
  RingPtr z = integer_ring();
  EndoMap plus_one(z, "plus_one",
                   [z](const Elem& a) { return a + z->one(); });
  Report r = check_endomorphism(plus_one, 0, 50);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("additive")->pass);
}

TEST_CASE("d/dy is not a const_term-derivation: fails at (y, y)") {
  RingPtr zy = make_ring("Poly(Z,y)");
  SigmaDerivation d_dy = builtin_derivation("d_dy", zy);
  SigmaDerivation mismatched(zy, poly_const_term(zy), "d_dy_misdeclared",
                             [d_dy](const Elem& a) { return d_dy(a); });
  Report r = check_sigma_derivation(mismatched, 0, 200);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("leibniz")->pass);

  // the witness pair from the definition: delta(y^2) = 2y but
  // delta(y) y + sigma(y) delta(y) = y
  Elem y = poly_var(zy);
  Elem lhs = mismatched(y * y);
  Elem rhs = mismatched(y) * y + poly_const_term(zy)(y) * mismatched(y);
  CHECK_FALSE(zy->eq(lhs, rhs));
  CHECK(zy->eq(lhs, y + y));
  CHECK(zy->eq(rhs, y));
}

TEST_CASE("builtin morphism values on documented inputs") {
  RingPtr zy = make_ring("Poly(Z,y)");
  Elem y = poly_var(zy);
  Elem p = zy->from_int(3) * y * y + zy->from_int(2);  // 3y^2 + 2
  CHECK(zy->eq(builtin_endo("const_term", zy)(p), zy->from_int(2)));
  CHECK(zy->eq(builtin_derivation("coeff_shift", zy)(p),
               zy->from_int(3) * y));
  CHECK(zy->eq(builtin_derivation("d_dy", zy)(p), zy->from_int(6) * y));

  CHECK_THROWS_AS(builtin_endo("nonsense", zy), Error);
  CHECK_THROWS_AS(builtin_endo("shift", zy), Error);  // ring/name mismatch
}

TEST_CASE("laurent substitution squares exponents") {
  RingPtr lr = make_ring("Laurent(Z/2,prec=8)");
  EndoMap sq = builtin_endo("laurent_square", lr);
  // x^-1 + x  ->  x^-2 + x^2
  RingPtr base = laurent_base(lr);
  std::vector<Elem> c(8, base->zero());
  c[0] = base->one();  // x^-1
  c[2] = base->one();  // x^1
  Elem f = laurent_make(lr, -1, std::move(c));
  Elem img = sq(f);
  CHECK(laurent_val(img) == -2);
  CHECK(base->eq(laurent_coeff(img, -2), base->one()));
  CHECK(base->eq(laurent_coeff(img, 2), base->one()));
  CHECK(base->eq(laurent_coeff(img, 0), base->zero()));
}

TEST_CASE("laurent inversion against multiplication") {
  RingPtr lr = make_ring("Laurent(Z/2,prec=8)");
  RingPtr base = laurent_base(lr);
  Rng rng(3);
  for (int t = 0; t < 25; ++t) {
    Elem f = lr->sample(rng);
    if (laurent_is_zero(f)) continue;
    Elem g = laurent_inverse(f);
    CHECK(lr->eq_window(f * g, lr->one(), 8));
  }
}

TEST_CASE("x -> x^2 on truncated Laurent series is not surjective") {
  RingPtr lr = make_ring("Laurent(Z/2,prec=8)");
  Report r = laurent_square_nonsurjectivity(lr, 0, 200, 8);
  CHECK(r.passed());
}

TEST_CASE("sequence shift is surjective but not injective on witnesses") {
  RingPtr pz = make_ring("P(Z/2)");
  RingPtr base = seq_base(pz);
  EndoMap shift = seq_shift_endo(pz);
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Elem s = pz->sample(rng);
    // preimage by prepending anything
    CHECK(pz->eq_window(shift(seq_prepend(base->zero(), s)), s, 8));
    CHECK(pz->eq_window(shift(seq_prepend(base->one(), s)), s, 8));
    // two preimages differing at index 0 collapse
    Elem s0 = seq_prepend(base->zero(), s);
    Elem s1 = seq_prepend(base->one(), s);
    CHECK_FALSE(pz->eq_window(s0, s1, 8));
    CHECK(pz->eq_window(shift(s0), shift(s1), 8));
  }
}

TEST_CASE("sequence ring arithmetic stays in the representable class") {
  RingPtr pz = make_ring("P(Z/4)");
  RingPtr base = seq_base(pz);
  Elem a = seq_make(pz, {base->from_int(1)},
                    {base->from_int(2), base->from_int(3)});
  Elem b = seq_make(pz, {}, {base->from_int(1), base->from_int(0),
                             base->from_int(2)});
  Elem c = a * b;
  // entries agree with pointwise products on a window
  for (std::size_t i = 0; i < 12; ++i)
    CHECK(base->eq(seq_entry(c, i), seq_entry(a, i) * seq_entry(b, i)));
}

TEST_CASE("samplers are deterministic in the seed") {
  for (const auto& spec : {"Z", "Z/4", "Poly(Z,y)", "P(Z/2)", "M2(Z/2)"}) {
    RingPtr ring = make_ring(spec);
    Rng r1(42), r2(42);
    for (int i = 0; i < 20; ++i)
      CHECK(eq_at(ring->sample(r1), ring->sample(r2), 16));
  }
}

TEST_CASE("enumerators yield each element exactly once") {
  for (const auto& spec : {"Z/5", "M2(Z/2)"}) {
    RingPtr ring = make_ring(spec);
    std::uint64_t n = ring->enum_size();
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < n; ++i)
      seen.insert(ring->key(ring->enum_at(i)));
    CHECK(seen.size() == n);
  }
}
