#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orelab/finiteness.hpp"
#include "orelab/ring_factory.hpp"
#include "orelab/rings_basic.hpp"
#include "orelab/sequence_ring.hpp"

using namespace orelab;

TEST_CASE("finite rings pass the exhaustive pair scan") {
  for (const auto& spec : {"Z/2", "Z/3", "Z/4", "M2(Z/2)"}) {
    FinitenessReport rep = directly_finite_brute(make_ring(spec));
    CAPTURE(spec);
    CHECK(rep.verdict == Verdict::Holds);
  }
  // M2(Z/2) has 16 elements, so the scan covers 256 ordered pairs
  CHECK(directly_finite_brute(make_ring("M2(Z/2)")).pairs_checked == 256);
}

namespace {

// a doctored finite multiplication table with a one-sided inverse: c*b = 1
// but b*c = b; not a lawful ring, which is exactly what the scanner's fail
// path needs to see
class OneSidedStub final : public Ring {
 public:
  OneSidedStub() : Ring("stub", RingCaps{true, true, 0}) {}
  Elem wrap(std::uint64_t v) const {
    return make(std::make_shared<std::uint64_t>(v));
  }
  std::uint64_t value(const Elem& a) const { return a.payload<std::uint64_t>(); }
  Elem zero() const override { return wrap(0); }
  Elem one() const override { return wrap(1); }
  Elem add(const Elem& a, const Elem& b) const override {
    return wrap((value(a) + value(b)) % 4);
  }
  Elem neg(const Elem& a) const override { return wrap((4 - value(a)) % 4); }
  Elem mul(const Elem& a, const Elem& b) const override {
    static const std::uint64_t table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 2, 2},  // b = 2
        {0, 3, 1, 3},  // c = 3, c*b = 1 while b*c = 2
    };
    return wrap(table[value(a)][value(b)]);
  }
  bool eq(const Elem& a, const Elem& b) const override {
    return value(a) == value(b);
  }
  Elem sample(Rng& rng) const override { return wrap(rng.below(4)); }
  std::uint64_t enum_size() const override { return 4; }
  Elem enum_at(std::uint64_t i) const override { return wrap(i); }
  std::string show(const Elem& a) const override {
    return std::to_string(value(a));
  }
};

}  // namespace

TEST_CASE("a one-sided inverse is found and its witness re-verifies") {
  RingPtr stub = std::make_shared<OneSidedStub>();
  FinitenessReport rep = directly_finite_brute(stub);
  REQUIRE(rep.verdict == Verdict::Fails);
  REQUIRE(rep.witness.has_value());
  const auto& [r, s] = *rep.witness;
  CHECK(stub->eq(r * s, stub->one()));
  CHECK_FALSE(stub->eq(s * r, stub->one()));
}

TEST_CASE("stable finiteness scans matrix levels") {
  CHECK(stably_finite_upto(mod_ring(2), 1).verdict == Verdict::Holds);
  CHECK(stably_finite_upto(mod_ring(2), 2).verdict == Verdict::Holds);
  // with room for all 6561 pairs the M2(Z/3) scan completes
  CHECK(stably_finite_upto(mod_ring(3), 2).verdict == Verdict::Holds);
  // a deliberately small budget gives up honestly instead of guessing
  CHECK(stably_finite_upto(mod_ring(3), 2, 100).verdict ==
        Verdict::Inconclusive);
}

TEST_CASE("non-enumerable rings are rejected rather than guessed") {
  CHECK_THROWS_AS(directly_finite_brute(integer_ring()), NotEnumerableError);
}

TEST_CASE("the one-sided-inverse showcase reproduces both products") {
  Report rep = ex116_demo();
  CHECK(rep.passed());
  REQUIRE(rep.find("xy_equals_1") != nullptr);
  REQUIRE(rep.find("yx_not_equal_1") != nullptr);
  CHECK(rep.find("x_y_squared_equals_y")->pass);
}

TEST_CASE("inverse transport demo over directly finite bases") {
  // frozen: p = 1 + 2x over Z/4 inverts with q = 1 - 2x + ... and q p = 1
  RingPtr z4 = mod_ring(4);
  EndoMap id = identity_endo(z4);
  SkewSeries p(z4, id, 8, {z4->one(), z4->from_int(2)});
  SkewSeries q = right_inverse(p);
  CHECK(series_eq(series_mul(q, p), SkewSeries::unit(z4, id, 8)));

  CHECK(skew_poly_finiteness_demo(z4, id, 8, true, 0, 100, true).passed());

  RingPtr pz2 = seq_ring(mod_ring(2));
  CHECK(skew_poly_finiteness_demo(pz2, seq_shift_endo(pz2), 8, true, 0, 100,
                                  false)
            .passed());

  RingPtr m2 = matrix_ring(mod_ring(2), 2);
  CHECK(skew_poly_finiteness_demo(m2, matrix_inner_automorphism(m2, 0), 8,
                                  true, 0, 100, false)
            .passed());

  CHECK_THROWS_AS(skew_poly_finiteness_demo(z4, id, 8, false), Error);
}

TEST_CASE("reports serialize verdicts and witnesses") {
  RingPtr stub = std::make_shared<OneSidedStub>();
  FinitenessReport rep = directly_finite_brute(stub);
  nlohmann::json j = rep.to_json();
  CHECK(j["verdict"] == "fails");
  CHECK(j.contains("witness"));
  FinitenessReport ok = directly_finite_brute(mod_ring(4));
  CHECK(ok.to_json()["verdict"] == "holds");
}
