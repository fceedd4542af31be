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

#include "orelab/laurent_ring.hpp"

#include <sstream>
#include <vector>

#include "orelab/rings_basic.hpp"

namespace orelab {
namespace {

// A truncated series knows its coefficients on [val, val + coeffs.size())
// and is exactly zero below val; everything at or above the window end is
// unknown. Operations compute the honest common window and never pad
// unknown positions with zeros, so ring and endomorphism laws hold on the
// stored windows.
struct LaurentVal {
  long long val = 0;
  std::vector<Elem> coeffs;  // 1 <= size <= prec

  long long end() const {
    return val + static_cast<long long>(coeffs.size());
  }
};

class LaurentRing final : public Ring {
 public:
  LaurentRing(RingPtr base, unsigned prec)
      : Ring("Laurent(" + base->name() + ",prec=" + std::to_string(prec) + ")",
             RingCaps{false, false, base->caps().characteristic}),
        base_(std::move(base)),
        prec_(prec) {
    if (!base_->caps().exact_equality)
      throw Error("Laurent series need an exact coefficient ring");
  }

  const RingPtr& base() const { return base_; }
  unsigned prec() const { return prec_; }

  const LaurentVal& value(const Elem& a) const {
    require_mine(a);
    return a.payload<LaurentVal>();
  }

  Elem wrap(long long val, std::vector<Elem> coeffs) const {
    if (coeffs.empty()) throw Error("Laurent window must be nonempty");
    if (coeffs.size() > prec_) coeffs.resize(prec_);
    LaurentVal v;
    v.val = val;
    v.coeffs = std::move(coeffs);
    return make(std::make_shared<LaurentVal>(std::move(v)));
  }

  // coefficient at an exponent inside the knowledge region (zero below the
  // window start)
  Elem coeff_at(const LaurentVal& v, long long e) const {
    if (e < v.val) return base_->zero();
    if (e >= v.end())
      throw Error("coefficient requested beyond the known window");
    return v.coeffs[static_cast<std::size_t>(e - v.val)];
  }

  Elem zero() const override {
    return wrap(0, std::vector<Elem>(prec_, base_->zero()));
  }
  Elem one() const override {
    std::vector<Elem> c(prec_, base_->zero());
    c[0] = base_->one();
    return wrap(0, std::move(c));
  }
  Elem from_int(const BigInt& n) const override {
    std::vector<Elem> c(prec_, base_->zero());
    c[0] = base_->from_int(n);
    return wrap(0, std::move(c));
  }

  Elem add(const Elem& a, const Elem& b) const override {
    const LaurentVal& x = value(a);
    const LaurentVal& y = value(b);
    long long val = std::min(x.val, y.val);
    long long end = std::min(x.end(), y.end());
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(end - val));
    for (long long e = val; e < end; ++e)
      out.push_back(coeff_at(x, e) + coeff_at(y, e));
    return wrap(val, std::move(out));
  }

  Elem neg(const Elem& a) const override {
    const LaurentVal& x = value(a);
    std::vector<Elem> out = x.coeffs;
    for (auto& c : out) c = -c;
    return wrap(x.val, std::move(out));
  }

  Elem mul(const Elem& a, const Elem& b) const override {
    const LaurentVal& x = value(a);
    const LaurentVal& y = value(b);
    std::size_t len = std::min(x.coeffs.size(), y.coeffs.size());
    std::vector<Elem> out(len, base_->zero());
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
      for (std::size_t j = 0; i + j < len && j < y.coeffs.size(); ++j)
        out[i + j] = out[i + j] + x.coeffs[i] * y.coeffs[j];
    return wrap(x.val + y.val, std::move(out));
  }

  // equality of the values on the common knowledge region; the stored
  // windows define the comparison, the parameter is not consulted
  bool eq_window(const Elem& a, const Elem& b, unsigned) const override {
    const LaurentVal& x = value(a);
    const LaurentVal& y = value(b);
    long long val = std::min(x.val, y.val);
    long long end = std::min(x.end(), y.end());
    for (long long e = val; e < end; ++e)
      if (!base_->eq(coeff_at(x, e), coeff_at(y, e))) return false;
    return true;
  }

  Elem sample(Rng& rng) const override {
    long long val = rng.int_in(-2, 2);
    std::vector<Elem> out;
    out.reserve(prec_);
    for (unsigned i = 0; i < prec_; ++i) out.push_back(base_->sample(rng));
    return wrap(val, std::move(out));
  }

  std::string show(const Elem& a) const override {
    const LaurentVal& v = value(a);
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
      if (base_->eq(v.coeffs[i], base_->zero())) continue;
      if (!first) out << " + ";
      first = false;
      long long e = v.val + static_cast<long long>(i);
      std::string c = base_->show(v.coeffs[i]);
      if (e == 0) {
        out << c;
      } else {
        if (c != "1") out << c << "*";
        out << "x^" << e;
      }
    }
    if (first) out << "0";
    out << " + O(x^" << v.end() << ")";
    return out.str();
  }

  nlohmann::json to_json(const Elem& a) const override {
    const LaurentVal& v = value(a);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : v.coeffs) coeffs.push_back(base_->to_json(c));
    return nlohmann::json{{"val", v.val}, {"coeffs", coeffs}};
  }

 private:
  RingPtr base_;
  unsigned prec_;
};

const LaurentRing& as_laurent(const RingPtr& ring) {
  const auto* p = dynamic_cast<const LaurentRing*>(ring.get());
  if (!p) throw Error("expected a Laurent ring, got '" + ring->name() + "'");
  return *p;
}

Elem base_inverse(const RingPtr& base, const Elem& c) {
  if (base->caps().enumerable) {
    std::uint64_t n = base->enum_size();
    for (std::uint64_t i = 0; i < n; ++i) {
      Elem v = base->enum_at(i);
      if (base->eq(c * v, base->one()) && base->eq(v * c, base->one()))
        return v;
    }
    throw Error("leading coefficient is not invertible");
  }
  if (is_integer_ring(base)) {
    if (base->eq(c, base->one())) return base->one();
    if (base->eq(c, -base->one())) return -base->one();
    throw Error("leading coefficient is not invertible over Z");
  }
  throw Error("cannot search for a coefficient inverse in '" + base->name() +
              "'");
}

// offset of the first nonzero known coefficient, or the window length
std::size_t lead_offset(const RingPtr& base,
                        const std::vector<Elem>& coeffs) {
  std::size_t l = 0;
  while (l < coeffs.size() && base->eq(coeffs[l], base->zero())) ++l;
  return l;
}

}  // namespace

RingPtr laurent_ring(RingPtr base, unsigned prec) {
  if (prec == 0) throw Error("Laurent ring requires prec >= 1");
  std::string name =
      "Laurent(" + base->name() + ",prec=" + std::to_string(prec) + ")";
  return intern_ring(name, [&base, prec] {
    return std::make_shared<LaurentRing>(base, prec);
  });
}

bool is_laurent_ring(const RingPtr& ring) {
  return dynamic_cast<const LaurentRing*>(ring.get()) != nullptr;
}

RingPtr laurent_base(const RingPtr& ring) { return as_laurent(ring).base(); }

unsigned laurent_prec(const RingPtr& ring) { return as_laurent(ring).prec(); }

Elem laurent_make(const RingPtr& ring, long long val,
                  std::vector<Elem> coeffs) {
  const auto& r = as_laurent(ring);
  coeffs.resize(r.prec(), laurent_base(ring)->zero());
  return r.wrap(val, std::move(coeffs));
}

Elem laurent_x(const RingPtr& ring) {
  const auto& r = as_laurent(ring);
  std::vector<Elem> c(r.prec(), r.base()->zero());
  c[0] = r.base()->one();
  return r.wrap(1, std::move(c));
}

long long laurent_val(const Elem& a) {
  const auto& r = as_laurent(a.ring_ptr());
  const auto& v = r.value(a);
  std::size_t l = lead_offset(r.base(), v.coeffs);
  if (l == v.coeffs.size())
    throw Error("valuation of a series that is zero on its window");
  return v.val + static_cast<long long>(l);
}

long long laurent_known_end(const Elem& a) {
  const auto& r = as_laurent(a.ring_ptr());
  return r.value(a).end();
}

Elem laurent_coeff(const Elem& a, long long exponent) {
  const auto& r = as_laurent(a.ring_ptr());
  return r.coeff_at(r.value(a), exponent);
}

bool laurent_is_zero(const Elem& a) {
  const auto& r = as_laurent(a.ring_ptr());
  const auto& v = r.value(a);
  return lead_offset(r.base(), v.coeffs) == v.coeffs.size();
}

Elem laurent_inverse(const Elem& a) {
  const auto& r = as_laurent(a.ring_ptr());
  const auto& base = r.base();
  const auto& v = r.value(a);
  std::size_t l = lead_offset(base, v.coeffs);
  if (l == v.coeffs.size())
    throw Error("division by a series that is zero on its window");
  Elem c = base_inverse(base, v.coeffs[l]);
  // a = x^{val+l} lead (1 + t); inverting costs the l leading positions of
  // the window, an honest loss of precision
  std::size_t len = v.coeffs.size() - l;
  std::vector<Elem> t(len, base->zero());
  for (std::size_t i = 1; i < len; ++i) t[i] = c * v.coeffs[l + i];
  std::vector<Elem> s(len, base->zero());
  s[0] = base->one();
  for (std::size_t k = 1; k < len; ++k) {
    Elem acc = base->zero();
    for (std::size_t i = 1; i <= k; ++i) acc = acc + t[i] * s[k - i];
    s[k] = -acc;
  }
  for (auto& e : s) e = e * c;
  return r.wrap(-(v.val + static_cast<long long>(l)), std::move(s));
}

EndoMap laurent_square_endo(const RingPtr& ring) {
  as_laurent(ring);
  RingPtr handle = ring;
  auto rule = [handle](const Elem& a) {
    const auto& lr = as_laurent(handle);
    const auto& v = lr.value(a);
    // exponent val + i maps to 2(val + i); odd exponents in between are
    // known-zero, so the image window reaches 2(end - 1) + 1
    std::size_t len = std::min<std::size_t>(2 * v.coeffs.size() - 1,
                                            lr.prec());
    std::vector<Elem> out(len, lr.base()->zero());
    for (std::size_t i = 0; 2 * i < len; ++i) out[2 * i] = v.coeffs[i];
    return lr.wrap(2 * v.val, std::move(out));
  };
  EndoMap sigma(ring, "laurent_square", rule);
  sigma.injective_claimed = true;
  sigma.surjective_claimed = false;
  return sigma;
}

Report laurent_square_nonsurjectivity(const RingPtr& ring, std::uint64_t seed,
                                      unsigned count, unsigned window) {
  const auto& r = as_laurent(ring);
  EndoMap sigma = laurent_square_endo(ring);
  Report report("laurent_square_nonsurjectivity", seed);
  report.set_param("ring", ring->name());
  report.set_param("count", count);
  report.set_param("window", window);

  bool even_support = true, doubled_val = true, x_unreached = true;
  std::string w1, w2, w3;
  Elem x = laurent_x(ring);
  Rng rng(seed);
  for (unsigned i = 0; i < count; ++i) {
    Elem f = ring->sample(rng);
    Elem img = sigma(f);
    if (laurent_is_zero(img)) continue;
    for (long long e = laurent_val(img); e < laurent_known_end(img); ++e) {
      if (e % 2 != 0 &&
          !r.base()->eq(laurent_coeff(img, e), r.base()->zero())) {
        even_support = false;
        w1 = "f=" + ring->show(f);
      }
    }
    if (!laurent_is_zero(f) && laurent_val(img) != 2 * laurent_val(f)) {
      doubled_val = false;
      w2 = "f=" + ring->show(f);
    }
    if (ring->eq_window(img, x, window)) {
      x_unreached = false;
      w3 = "f=" + ring->show(f);
    }
  }
  report.add("image_support_even", even_support, w1);
  report.add("valuation_doubles", doubled_val, w2);
  report.add("x_unreached_by_samples", x_unreached, w3);
  // any preimage of x would need valuation 1/2: impossible for integers in
  // [-window, window]
  bool parity = true;
  for (long long v = -static_cast<long long>(window);
       v <= static_cast<long long>(window); ++v)
    if (2 * v == 1) parity = false;
  report.add("odd_valuation_unreachable", parity);
  return report;
}

}  // namespace orelab
