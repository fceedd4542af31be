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

#include "orelab/free_ring.hpp"

#include <sstream>

namespace orelab {
namespace {

class FreeRing final : public Ring {
 public:
  FreeRing(std::string name, std::string alphabet,
           std::vector<std::string> forbidden, std::size_t bound)
      : Ring(std::move(name), RingCaps{false, true, 0}),
        alphabet_(std::move(alphabet)),
        forbidden_(std::move(forbidden)),
        bound_(bound) {}

  const std::string& alphabet() const { return alphabet_; }
  const std::vector<std::string>& forbidden() const { return forbidden_; }
  std::size_t bound() const { return bound_; }

  bool word_dies(const std::string& w) const {
    for (const auto& f : forbidden_)
      if (w.find(f) != std::string::npos) return true;
    return false;
  }

  void check_word(const std::string& w) const {
    if (w.size() > bound_) throw DegreeBoundError(w.size(), bound_);
    for (char c : w)
      if (alphabet_.find(c) == std::string::npos)
        throw Error("generator '" + std::string(1, c) +
                    "' is not in the alphabet of " + name());
  }

  Elem wrap(FreeTermMap terms) const {
    return make(std::make_shared<FreeTermMap>(std::move(terms)));
  }

  const FreeTermMap& terms(const Elem& a) const {
    require_mine(a);
    return a.payload<FreeTermMap>();
  }

  // accumulate coeff * word, normalizing and dropping zeros
  void accumulate(FreeTermMap& into, const std::string& word,
                  const BigInt& coeff) const {
    if (coeff == 0) return;
    check_word(word);
    if (word_dies(word)) return;
    auto it = into.find(word);
    if (it == into.end()) {
      into.emplace(word, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) into.erase(it);
    }
  }

  Elem zero() const override { return wrap({}); }
  Elem one() const override {
    FreeTermMap t;
    t.emplace("", 1);
    return wrap(std::move(t));
  }
  Elem from_int(const BigInt& n) const override {
    FreeTermMap t;
    if (n != 0) t.emplace("", n);
    return wrap(std::move(t));
  }

  Elem add(const Elem& a, const Elem& b) const override {
    FreeTermMap out = terms(a);
    for (const auto& [w, c] : terms(b)) accumulate(out, w, c);
    return wrap(std::move(out));
  }

  Elem neg(const Elem& a) const override {
    FreeTermMap out = terms(a);
    for (auto& [w, c] : out) c = -c;
    return wrap(std::move(out));
  }

  Elem mul(const Elem& a, const Elem& b) const override {
    FreeTermMap out;
    for (const auto& [wa, ca] : terms(a))
      for (const auto& [wb, cb] : terms(b)) accumulate(out, wa + wb, ca * cb);
    return wrap(std::move(out));
  }

  bool eq(const Elem& a, const Elem& b) const override {
    return terms(a) == terms(b);
  }

  // words of length <= 2, so sampled triple products stay under the default
  // degree cap in law checks
  Elem sample(Rng& rng) const override {
    FreeTermMap out;
    std::size_t nterms = rng.below(4);
    for (std::size_t t = 0; t < nterms; ++t) {
      std::size_t len = rng.below(3);
      std::string w;
      for (std::size_t i = 0; i < len; ++i)
        w.push_back(alphabet_[rng.below(alphabet_.size())]);
      BigInt c = rng.int_in(-3, 3);
      accumulate(out, w, c);
    }
    return wrap(std::move(out));
  }

  std::string show(const Elem& a) const override {
    const FreeTermMap& t = terms(a);
    if (t.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // longest words first, constants last
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      BigInt c = it->second;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      BigInt m = c < 0 ? BigInt(-c) : c;
      if (it->first.empty()) {
        out << m.str();
      } else {
        if (m != 1) out << m.str() << "*";
        out << it->first;
      }
      first = false;
    }
    return out.str();
  }

  nlohmann::json to_json(const Elem& a) const override {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [w, c] : terms(a)) obj[w] = bigint_to_json(c);
    return obj;
  }

 private:
  std::string alphabet_;
  std::vector<std::string> forbidden_;
  std::size_t bound_;
};

const FreeRing& as_free(const RingPtr& ring) {
  const auto* p = dynamic_cast<const FreeRing*>(ring.get());
  if (!p) throw Error("expected a free ring, got '" + ring->name() + "'");
  return *p;
}

std::string canonical_name(const std::string& alphabet,
                           const std::vector<std::string>& forbidden,
                           std::size_t bound) {
  std::ostringstream out;
  out << "Free(";
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i) out << ",";
    out << alphabet[i];
  }
  if (!forbidden.empty()) {
    out << "|";
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
      if (i) out << ",";
      out << forbidden[i] << "=0";
    }
  }
  out << ")";
  if (bound != 8) out << "[bound=" << bound << "]";
  return out.str();
}

}  // namespace

RingPtr free_ring(const std::string& alphabet,
                  std::vector<std::string> forbidden_factors,
                  std::size_t degree_bound) {
  if (alphabet.empty()) throw Error("free ring needs at least one generator");
  std::string name = canonical_name(alphabet, forbidden_factors, degree_bound);
  return intern_ring(name, [&] {
    return std::make_shared<FreeRing>(name, alphabet,
                                      std::move(forbidden_factors),
                                      degree_bound);
  });
}

RingPtr free_ring_uv() { return free_ring("uv", {}); }

RingPtr free_ring_uvx_rel() { return free_ring("uvx", {"xu", "xv"}); }

bool is_free_ring(const RingPtr& ring) {
  return dynamic_cast<const FreeRing*>(ring.get()) != nullptr;
}

const std::string& free_alphabet(const RingPtr& ring) {
  return as_free(ring).alphabet();
}

const std::vector<std::string>& free_forbidden(const RingPtr& ring) {
  return as_free(ring).forbidden();
}

std::size_t free_degree_bound(const RingPtr& ring) {
  return as_free(ring).bound();
}

Elem free_word(const RingPtr& ring, const std::string& word,
               const BigInt& coeff) {
  const auto& r = as_free(ring);
  FreeTermMap out;
  r.accumulate(out, word, coeff);
  return r.wrap(std::move(out));
}

Elem free_from_terms(const RingPtr& ring,
                     const std::vector<std::pair<std::string, BigInt>>& terms) {
  const auto& r = as_free(ring);
  FreeTermMap out;
  for (const auto& [w, c] : terms) r.accumulate(out, w, c);
  return r.wrap(std::move(out));
}

const FreeTermMap& free_terms(const Elem& a) {
  return as_free(a.ring_ptr()).terms(a);
}

Elem free_normal_form(const Elem& a) {
  const auto& r = as_free(a.ring_ptr());
  FreeTermMap out;
  for (const auto& [w, c] : r.terms(a)) r.accumulate(out, w, c);
  return r.wrap(std::move(out));
}

EndoMap free_const_term_endo(const RingPtr& ring) {
  as_free(ring);
  RingPtr handle = ring;
  auto rule = [handle](const Elem& a) {
    const FreeTermMap& t = free_terms(a);
    auto it = t.find("");
    return it == t.end() ? handle->zero() : handle->from_int(it->second);
  };
  return EndoMap(ring, "const_term", rule);
}

IndependenceResult left_independence_uv(const Elem& a, const Elem& b) {
  require_same_ring(a, b);
  const RingPtr ring = a.ring_ptr();
  const auto& r = as_free(ring);
  if (r.alphabet().find('u') == std::string::npos ||
      r.alphabet().find('v') == std::string::npos)
    throw Error("left_independence_uv needs generators u and v");
  Elem combo = a * free_word(ring, "u") + b * free_word(ring, "v");
  IndependenceResult res;
  res.is_zero_combo = free_terms(combo).empty();
  res.forces_zero = free_terms(a).empty() && free_terms(b).empty();
  return res;
}

OreRingPtr ex113_ore_ring(unsigned law_check_count) {
  RingPtr base = free_ring_uv();
  EndoMap sigma = free_const_term_endo(base);
  return OreRing::make(base, sigma, zero_derivation(base, sigma),
                       law_check_count);
}

OrePoly ex113_iso(const Elem& p, const OreRingPtr& target) {
  const auto& r = as_free(p.ring_ptr());
  if (r.alphabet() != "uvx")
    throw Error("ex113_iso expects an element of the u,v,x quotient");
  const RingPtr& base = target->base();
  std::vector<Elem> coeffs;
  auto coeff_ref = [&](std::size_t k) -> Elem& {
    if (coeffs.size() <= k) coeffs.resize(k + 1, base->zero());
    return coeffs[k];
  };
  for (const auto& [w, c] : free_terms(p)) {
    // normal words have the shape (u|v)* x*: everything from the first x on
    // must be x
    std::size_t split = w.find('x');
    std::string core = split == std::string::npos ? w : w.substr(0, split);
    std::size_t k = split == std::string::npos ? 0 : w.size() - split;
    for (std::size_t i = split; i != std::string::npos && i < w.size(); ++i)
      if (w[i] != 'x')
        throw Error("ex113_iso: input term '" + w + "' is not in normal form");
    coeff_ref(k) = coeff_ref(k) + free_word(base, core, c);
  }
  return OrePoly(target, std::move(coeffs));
}

Elem ex113_iso_inv(const OrePoly& p, const RingPtr& quotient) {
  const auto& q = as_free(quotient);
  if (q.alphabet() != "uvx")
    throw Error("ex113_iso_inv targets the u,v,x quotient");
  FreeTermMap out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    std::string xs(k, 'x');
    for (const auto& [w, c] : free_terms(p.coeffs()[k]))
      q.accumulate(out, w + xs, c);
  }
  return q.wrap(std::move(out));
}

}  // namespace orelab
