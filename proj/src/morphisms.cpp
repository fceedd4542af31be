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

#include "orelab/morphisms.hpp"

namespace orelab {

const EndoMap& EndoMap::inverse() const {
  if (!inverse_) throw Error("endomorphism '" + name_ + "' has no inverse");
  return *inverse_;
}

EndoMap identity_endo(RingPtr ring) {
  EndoMap id(ring, "id", [](const Elem& a) { return a; });
  id.injective_claimed = true;
  id.surjective_claimed = true;
  // self-inverse; a copy without the inverse field avoids infinite regress
  EndoMap inv(ring, "id", [](const Elem& a) { return a; });
  id.set_inverse(std::move(inv));
  return id;
}

SigmaDerivation zero_derivation(RingPtr ring, EndoMap sigma) {
  RingPtr r = ring;
  return SigmaDerivation(
      ring, std::move(sigma), "zero",
      [r](const Elem&) { return r->zero(); });
}

namespace {

std::string pair_witness(const Elem& a, const Elem& b) {
  return "a=" + a.ring().show(a) + ", b=" + b.ring().show(b);
}

std::string triple_witness(const Elem& a, const Elem& b, const Elem& c) {
  return pair_witness(a, b) + ", c=" + c.ring().show(c);
}

}  // namespace

Report ring_axioms_check(const RingPtr& ring, std::uint64_t seed,
                         unsigned count, unsigned window) {
  Report report("ring_axioms", seed);
  report.set_param("ring", ring->name());
  report.set_param("count", count);
  report.set_param("window", window);

  struct Axiom {
    const char* name;
    bool ok = true;
    std::string witness;
  };
  Axiom axioms[] = {
      {"add_associative", true, ""},   {"add_commutative", true, ""},
      {"add_zero", true, ""},          {"add_inverse", true, ""},
      {"mul_associative", true, ""},   {"one_left", true, ""},
      {"one_right", true, ""},         {"distributive_left", true, ""},
      {"distributive_right", true, ""},
  };
  auto fail = [&](int idx, std::string w) {
    if (axioms[idx].ok) {
      axioms[idx].ok = false;
      axioms[idx].witness = std::move(w);
    }
  };

  Rng rng(seed);
  const Elem zero = ring->zero();
  const Elem one = ring->one();
  for (unsigned i = 0; i < count; ++i) {
    Elem a = ring->sample(rng);
    Elem b = ring->sample(rng);
    Elem c = ring->sample(rng);
    auto same = [&](const Elem& x, const Elem& y) {
      return eq_at(x, y, window);
    };
    if (!same((a + b) + c, a + (b + c))) fail(0, triple_witness(a, b, c));
    if (!same(a + b, b + a)) fail(1, pair_witness(a, b));
    if (!same(a + zero, a)) fail(2, "a=" + ring->show(a));
    if (!same(a + (-a), zero)) fail(3, "a=" + ring->show(a));
    if (!same((a * b) * c, a * (b * c))) fail(4, triple_witness(a, b, c));
    if (!same(one * a, a)) fail(5, "a=" + ring->show(a));
    if (!same(a * one, a)) fail(6, "a=" + ring->show(a));
    if (!same(a * (b + c), a * b + a * c)) fail(7, triple_witness(a, b, c));
    if (!same((a + b) * c, a * c + b * c)) fail(8, triple_witness(a, b, c));
  }
  for (const auto& ax : axioms) report.add(ax.name, ax.ok, ax.witness);
  return report;
}

Report check_endomorphism(const EndoMap& sigma, std::uint64_t seed,
                          unsigned count, unsigned window) {
  if (!sigma.valid()) throw Error("check_endomorphism: empty map");
  const RingPtr& ring = sigma.domain();
  Report report("endomorphism:" + sigma.name(), seed);
  report.set_param("ring", ring->name());
  report.set_param("count", count);
  report.set_param("window", window);

  bool additive = true, multiplicative = true, unital = true;
  bool inverse_ok = true;
  std::string w_add, w_mul, w_inv;

  unital = eq_at(sigma(ring->one()), ring->one(), window) &&
           eq_at(sigma(ring->zero()), ring->zero(), window);

  Rng rng(seed);
  for (unsigned i = 0; i < count; ++i) {
    Elem a = ring->sample(rng);
    Elem b = ring->sample(rng);
    if (additive && !eq_at(sigma(a + b), sigma(a) + sigma(b), window)) {
      additive = false;
      w_add = pair_witness(a, b);
    }
    if (multiplicative && !eq_at(sigma(a * b), sigma(a) * sigma(b), window)) {
      multiplicative = false;
      w_mul = pair_witness(a, b);
    }
    if (sigma.has_inverse() && inverse_ok) {
      const EndoMap& inv = sigma.inverse();
      if (!eq_at(inv(sigma(a)), a, window) ||
          !eq_at(sigma(inv(a)), a, window)) {
        inverse_ok = false;
        w_inv = "a=" + ring->show(a);
      }
    }
  }
  report.add("additive", additive, w_add);
  report.add("multiplicative", multiplicative, w_mul);
  report.add("preserves_unit", unital);
  if (sigma.has_inverse()) report.add("inverse_roundtrip", inverse_ok, w_inv);
  return report;
}

Report check_sigma_derivation(const SigmaDerivation& delta, std::uint64_t seed,
                              unsigned count, unsigned window) {
  if (!delta.valid()) throw Error("check_sigma_derivation: empty map");
  const RingPtr& ring = delta.domain();
  const EndoMap& sigma = delta.sigma();
  Report report("sigma_derivation:" + delta.name(), seed);
  report.set_param("ring", ring->name());
  report.set_param("sigma", sigma.name());
  report.set_param("count", count);
  report.set_param("window", window);

  bool additive = true, leibniz = true;
  std::string w_add, w_lei;

  Rng rng(seed);
  for (unsigned i = 0; i < count; ++i) {
    Elem a = ring->sample(rng);
    Elem b = ring->sample(rng);
    if (additive && !eq_at(delta(a + b), delta(a) + delta(b), window)) {
      additive = false;
      w_add = pair_witness(a, b);
    }
    if (leibniz &&
        !eq_at(delta(a * b), delta(a) * b + sigma(a) * delta(b), window)) {
      leibniz = false;
      w_lei = pair_witness(a, b);
    }
  }
  report.add("additive", additive, w_add);
  report.add("leibniz", leibniz, w_lei);
  return report;
}

}  // namespace orelab
