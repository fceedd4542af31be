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

#include "orelab/ore_poly.hpp"

#include <sstream>

namespace orelab {

namespace {

void require_same_ore_ring(const OrePoly& p, const OrePoly& q) {
  if (!p.valid() || !q.valid())
    throw Error("operation on default-constructed Ore polynomial");
  if (p.ring().get() != q.ring().get())
    throw RingMismatchError(p.ring()->name(), q.ring()->name());
}

std::string coeff_str(const std::string& s) {
  if (s.find_first_of(" +*^(") == std::string::npos) return s;
  return "(" + s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// OreRing

OreRing::OreRing(RingPtr base, EndoMap sigma, SigmaDerivation delta,
                 std::string name)
    : base_(std::move(base)),
      sigma_(std::move(sigma)),
      delta_(std::move(delta)),
      name_(std::move(name)) {}

OreRingPtr OreRing::make(RingPtr base, EndoMap sigma, SigmaDerivation delta,
                         unsigned law_check_count,
                         std::uint64_t law_check_seed) {
  if (!sigma.valid()) sigma = identity_endo(base);
  if (!delta.valid()) delta = zero_derivation(base, sigma);
  if (sigma.domain().get() != base.get())
    throw Error("sigma is not an endomorphism of the coefficient ring");
  if (delta.domain().get() != base.get())
    throw Error("delta is not a map on the coefficient ring");
  if (!delta.sigma().same_as(sigma))
    throw Error("delta's twist differs from the Ore extension's sigma");
  if (law_check_count > 0) {
    Report rs = check_endomorphism(sigma, law_check_seed, law_check_count);
    if (!rs.passed())
      throw Error("sigma fails the endomorphism laws on samples: ring " +
                  base->name() + ", map " + sigma.name());
    Report rd = check_sigma_derivation(delta, law_check_seed, law_check_count);
    if (!rd.passed())
      throw Error("delta fails the sigma-derivation laws on samples: ring " +
                  base->name() + ", map " + delta.name());
  }
  std::string name =
      base->name() + "[x;" + sigma.name() + "," + delta.name() + "]";
  return OreRingPtr(new OreRing(std::move(base), std::move(sigma),
                                std::move(delta), std::move(name)));
}

// ---------------------------------------------------------------------------
// OrePoly

OrePoly::OrePoly(OreRingPtr ring, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  const RingPtr& base = ring_->base();
  if (base->caps().exact_equality) {
    while (!coeffs_.empty() && base->eq(coeffs_.back(), base->zero()))
      coeffs_.pop_back();
  }
}

OrePoly OrePoly::zero(OreRingPtr ring) { return OrePoly(std::move(ring), {}); }

OrePoly OrePoly::one(OreRingPtr ring) {
  Elem c = ring->base()->one();
  return OrePoly(std::move(ring), {c});
}

OrePoly OrePoly::constant(OreRingPtr ring, const Elem& r) {
  if (r.ring_ptr().get() != ring->base().get())
    throw RingMismatchError(ring->base()->name(), r.ring().name());
  return OrePoly(std::move(ring), {r});
}

OrePoly OrePoly::variable(OreRingPtr ring) {
  const RingPtr& base = ring->base();
  return OrePoly(ring, {base->zero(), base->one()});
}

Elem OrePoly::coeff_at(unsigned i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return ring_->base()->zero();
}

OrePoly ore_add(const OrePoly& p, const OrePoly& q) {
  require_same_ore_ring(p, q);
  const RingPtr& base = p.ring()->base();
  std::vector<Elem> out(std::max(p.coeffs().size(), q.coeffs().size()),
                        base->zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < p.coeffs().size()) out[i] = out[i] + p.coeffs()[i];
    if (i < q.coeffs().size()) out[i] = out[i] + q.coeffs()[i];
  }
  return OrePoly(p.ring(), std::move(out));
}

OrePoly ore_neg(const OrePoly& p) {
  std::vector<Elem> out = p.coeffs();
  for (auto& c : out) c = -c;
  return OrePoly(p.ring(), std::move(out));
}

OrePoly ore_sub(const OrePoly& p, const OrePoly& q) {
  return ore_add(p, ore_neg(q));
}

OrePoly ore_scale_left(const Elem& r, const OrePoly& p) {
  std::vector<Elem> out = p.coeffs();
  for (auto& c : out) c = r * c;
  return OrePoly(p.ring(), std::move(out));
}

OrePoly ore_mul_x_left(const OrePoly& p) {
  const OreRingPtr& ring = p.ring();
  const RingPtr& base = ring->base();
  const EndoMap& sigma = ring->sigma();
  const SigmaDerivation& delta = ring->delta();
  if (p.is_zero()) return p;
  std::vector<Elem> out(p.coeffs().size() + 1, base->zero());
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    out[j + 1] = out[j + 1] + sigma(p.coeffs()[j]);
    out[j] = out[j] + delta(p.coeffs()[j]);
  }
  return OrePoly(ring, std::move(out));
}

OrePoly ore_mul(const OrePoly& p, const OrePoly& q) {
  require_same_ore_ring(p, q);
  OrePoly acc = OrePoly::zero(p.ring());
  OrePoly shifted = q;  // x^i q
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    acc = ore_add(acc, ore_scale_left(p.coeffs()[i], shifted));
    if (i + 1 < p.coeffs().size()) shifted = ore_mul_x_left(shifted);
  }
  return acc;
}

OrePoly ore_pow(const OrePoly& p, unsigned n) {
  OrePoly acc = OrePoly::one(p.ring());
  for (unsigned i = 0; i < n; ++i) acc = ore_mul(acc, p);
  return acc;
}

bool ore_eq(const OrePoly& p, const OrePoly& q, unsigned window) {
  require_same_ore_ring(p, q);
  const RingPtr& base = p.ring()->base();
  std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    Elem a = i < p.coeffs().size() ? p.coeffs()[i] : base->zero();
    Elem b = i < q.coeffs().size() ? q.coeffs()[i] : base->zero();
    if (!eq_at(a, b, window)) return false;
  }
  return true;
}

std::string ore_show(const OrePoly& p) {
  if (p.is_zero()) return "0";
  const RingPtr& base = p.ring()->base();
  std::ostringstream out;
  bool first = true;
  for (std::size_t idx = p.coeffs().size(); idx-- > 0;) {
    const Elem& c = p.coeffs()[idx];
    if (base->caps().exact_equality && base->eq(c, base->zero())) continue;
    if (!first) out << " + ";
    first = false;
    std::string s = coeff_str(base->show(c));
    if (idx == 0) {
      out << s;
    } else {
      if (s != "1") out << s << "*";
      out << "x";
      if (idx > 1) out << "^" << idx;
    }
  }
  if (first) return "0";
  return out.str();
}

nlohmann::json ore_to_json(const OrePoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs())
    arr.push_back(p.ring()->base()->to_json(c));
  return arr;
}

OrePoly operator+(const OrePoly& p, const OrePoly& q) { return ore_add(p, q); }
OrePoly operator-(const OrePoly& p, const OrePoly& q) { return ore_sub(p, q); }
OrePoly operator*(const OrePoly& p, const OrePoly& q) { return ore_mul(p, q); }
OrePoly operator-(const OrePoly& p) { return ore_neg(p); }

// ---------------------------------------------------------------------------
// named operations

OrePoly x_power_times(const OreRingPtr& ring, const Elem& r, unsigned n) {
  OrePoly p = OrePoly::constant(ring, r);
  for (unsigned i = 0; i < n; ++i) p = ore_mul_x_left(p);
  return p;
}

KernelPowerResult kernel_sigma_power_check(const OreRingPtr& ring,
                                           const Elem& a, unsigned i,
                                           unsigned window) {
  const RingPtr& base = ring->base();
  if (!eq_at(ring->sigma()(a), base->zero(), window))
    throw Error("kernel_sigma_power_check: a is not in ker(sigma)");
  OrePoly value = x_power_times(ring, elem_pow(a, i), i);
  KernelPowerResult res;
  res.in_base = value.is_zero() || value.degree() == 0;
  res.value = std::move(value);
  return res;
}

std::vector<Elem> right_coefficients(const OrePoly& p) {
  const OreRingPtr& ring = p.ring();
  const RingPtr& base = ring->base();
  if (!base->caps().exact_equality)
    throw Error("right_coefficients needs an exact coefficient ring");
  if (!ring->sigma().has_inverse())
    throw Error("right_coefficients requires sigma to be an automorphism "
                "with a registered inverse");
  const EndoMap& inv = ring->sigma().inverse();
  if (p.is_zero()) return {};
  std::vector<Elem> s(p.coeffs().size(), base->zero());
  OrePoly rem = p;
  while (!rem.is_zero()) {
    unsigned d = rem.degree();
    Elem sd = inv.power(rem.coeffs()[d], d);
    s[d] = sd;
    rem = ore_sub(rem, x_power_times(ring, sd, d));
    if (!rem.is_zero() && rem.degree() >= d)
      throw Error("right_coefficients: degree failed to drop; sigma's "
                  "registered inverse is not a two-sided inverse");
  }
  return s;
}

OrePoly from_right_coefficients(const OreRingPtr& ring,
                                const std::vector<Elem>& s) {
  OrePoly acc = OrePoly::zero(ring);
  for (std::size_t i = 0; i < s.size(); ++i)
    acc = ore_add(acc, x_power_times(ring, s[i], static_cast<unsigned>(i)));
  return acc;
}

unsigned Filtration::level(const OrePoly& p) const {
  return filtration_level(p);
}

unsigned filtration_level(const OrePoly& p) { return p.degree(); }

OrePoly projection_pi(const OrePoly& p, unsigned l) {
  if (p.coeffs().size() <= std::size_t(l) + 1) return p;
  std::vector<Elem> out(p.coeffs().begin(), p.coeffs().begin() + l + 1);
  return OrePoly(p.ring(), std::move(out));
}

std::uint64_t min_filtration_shift(std::uint64_t n, std::uint64_t m,
                                   std::uint64_t k) {
  if (m <= n) throw Error("min_filtration_shift requires m > n");
  std::uint64_t l = (n * k) / (m - n);
  // the choice renders n(k+l+1) < m(l+1)
  if (n * (k + l + 1) >= m * (l + 1))
    throw Error("min_filtration_shift: internal bound violation");
  return l;
}

// ---------------------------------------------------------------------------
// Weyl rings

OreRingPtr weyl_ring(RingPtr coefficients, unsigned law_check_count) {
  RingPtr base = poly_ring(std::move(coefficients));
  return OreRing::make(base, identity_endo(base), poly_differentiation(base),
                       law_check_count);
}

OreRingPtr weyl_ring_iterated(RingPtr coefficients, unsigned n,
                              unsigned law_check_count) {
  if (n < 1 || n > 3) throw Error("iterated Weyl rings are supported for n <= 3");
  OreRingPtr w = weyl_ring(std::move(coefficients), law_check_count);
  for (unsigned i = 1; i < n; ++i)
    w = weyl_ring(ore_extension_ring(w), law_check_count);
  return w;
}

Report weyl_relation_check(const OreRingPtr& weyl, std::uint64_t seed,
                           unsigned count) {
  Report report("weyl_relation", seed);
  report.set_param("ring", weyl->name());
  report.set_param("count", count);
  const RingPtr& basepoly = weyl->base();
  RingPtr coeff = poly_base(basepoly);

  OrePoly x = OrePoly::variable(weyl);
  OrePoly y = OrePoly::constant(weyl, poly_var(basepoly));
  OrePoly onep = OrePoly::one(weyl);
  bool relation = ore_eq(ore_sub(ore_mul(x, y), ore_mul(y, x)), onep);
  report.add("xy_minus_yx_is_1", relation);

  bool central = true;
  std::string witness;
  Rng rng(seed);
  for (unsigned i = 0; i < count && central; ++i) {
    Elem r = coeff->sample(rng);
    OrePoly rp = OrePoly::constant(
        weyl, poly_from_coeffs(basepoly, {r}));
    if (!ore_eq(ore_mul(x, rp), ore_mul(rp, x)) ||
        !ore_eq(ore_mul(y, rp), ore_mul(rp, y))) {
      central = false;
      witness = "r=" + coeff->show(r);
    }
  }
  report.add("coefficients_central", central, witness);
  return report;
}

// ---------------------------------------------------------------------------
// ring adapter

namespace {

class OreExtensionRing final : public Ring {
 public:
  explicit OreExtensionRing(OreRingPtr ore)
      : Ring(ore->name(),
             RingCaps{false, ore->base()->caps().exact_equality,
                      ore->base()->caps().characteristic}),
        ore_(std::move(ore)) {}

  const OreRingPtr& ore() const { return ore_; }

  Elem wrap(OrePoly p) const {
    return make(std::make_shared<OrePoly>(std::move(p)));
  }
  const OrePoly& poly(const Elem& a) const {
    require_mine(a);
    return a.payload<OrePoly>();
  }

  Elem zero() const override { return wrap(OrePoly::zero(ore_)); }
  Elem one() const override { return wrap(OrePoly::one(ore_)); }
  Elem from_int(const BigInt& n) const override {
    return wrap(OrePoly::constant(ore_, ore_->base()->from_int(n)));
  }
  Elem add(const Elem& a, const Elem& b) const override {
    return wrap(ore_add(poly(a), poly(b)));
  }
  Elem neg(const Elem& a) const override { return wrap(ore_neg(poly(a))); }
  Elem mul(const Elem& a, const Elem& b) const override {
    return wrap(ore_mul(poly(a), poly(b)));
  }
  bool eq(const Elem& a, const Elem& b) const override {
    if (!caps().exact_equality) throw WindowedEqualityError(name());
    return ore_eq(poly(a), poly(b));
  }
  bool eq_window(const Elem& a, const Elem& b, unsigned w) const override {
    return ore_eq(poly(a), poly(b), w);
  }
  Elem sample(Rng& rng) const override {
    std::size_t deg = rng.below(3);
    std::vector<Elem> coeffs;
    for (std::size_t i = 0; i <= deg; ++i)
      coeffs.push_back(ore_->base()->sample(rng));
    return wrap(OrePoly(ore_, std::move(coeffs)));
  }
  std::string show(const Elem& a) const override { return ore_show(poly(a)); }
  nlohmann::json to_json(const Elem& a) const override {
    return ore_to_json(poly(a));
  }

 private:
  OreRingPtr ore_;
};

const OreExtensionRing& as_ore_ext(const RingPtr& ring) {
  const auto* p = dynamic_cast<const OreExtensionRing*>(ring.get());
  if (!p)
    throw Error("expected an Ore extension ring, got '" + ring->name() + "'");
  return *p;
}

}  // namespace

RingPtr ore_extension_ring(OreRingPtr ring) {
  // not interned by name: distinct OreRing handles stay distinct even when
  // they print alike (they may carry different rule closures)
  return std::make_shared<OreExtensionRing>(std::move(ring));
}

bool is_ore_extension_ring(const RingPtr& ring) {
  return dynamic_cast<const OreExtensionRing*>(ring.get()) != nullptr;
}

OreRingPtr ore_ring_of(const RingPtr& adapter) {
  return as_ore_ext(adapter).ore();
}

const OrePoly& ore_elem_poly(const Elem& e) {
  return as_ore_ext(e.ring_ptr()).poly(e);
}

Elem ore_elem(const RingPtr& adapter, OrePoly p) {
  const auto& r = as_ore_ext(adapter);
  if (p.ring().get() != r.ore().get())
    throw RingMismatchError(adapter->name(), p.ring()->name());
  return r.wrap(std::move(p));
}

}  // namespace orelab
