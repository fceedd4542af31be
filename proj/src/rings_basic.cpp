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

#include "orelab/rings_basic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace orelab {
namespace {

// Wrap compound coefficient renderings so that joined terms stay unambiguous.
std::string coeff_str(const std::string& s) {
  if (s.find_first_of(" +*^(") == std::string::npos) return s;
  return "(" + s + ")";
}

// ---------------------------------------------------------------------------
// Z

class IntegerRing final : public Ring {
 public:
  IntegerRing() : Ring("Z", RingCaps{false, true, 0}) {}

  // Small values are interned once; arithmetic on them allocates nothing.
  void init_cache() {
    cache_.reserve(2 * kCacheMax + 1);
    for (long i = -kCacheMax; i <= kCacheMax; ++i)
      cache_.push_back(make(std::make_shared<BigInt>(i)));
  }

  Elem wrap(BigInt n) const {
    if (!cache_.empty() && n >= -kCacheMax && n <= kCacheMax)
      return cache_[static_cast<std::size_t>(static_cast<long>(n) +
                                             kCacheMax)];
    return make(std::make_shared<BigInt>(std::move(n)));
  }

  const BigInt& value(const Elem& a) const {
    require_mine(a);
    return a.payload<BigInt>();
  }

  Elem zero() const override { return wrap(0); }
  Elem one() const override { return wrap(1); }
  Elem from_int(const BigInt& n) const override { return wrap(n); }
  Elem add(const Elem& a, const Elem& b) const override {
    return wrap(value(a) + value(b));
  }
  Elem neg(const Elem& a) const override { return wrap(-value(a)); }
  Elem mul(const Elem& a, const Elem& b) const override {
    return wrap(value(a) * value(b));
  }
  bool eq(const Elem& a, const Elem& b) const override {
    return value(a) == value(b);
  }
  Elem sample(Rng& rng) const override { return wrap(rng.int_in(-9, 9)); }
  std::string show(const Elem& a) const override { return value(a).str(); }
  nlohmann::json to_json(const Elem& a) const override {
    return bigint_to_json(value(a));
  }

 private:
  static constexpr long kCacheMax = 32;
  std::vector<Elem> cache_;
};

// ---------------------------------------------------------------------------
// Z/n

class ModRing final : public Ring {
 public:
  explicit ModRing(std::uint64_t n)
      : Ring("Z/" + std::to_string(n), RingCaps{true, true, BigInt(n)}),
        n_(n) {}

  void init_cache() {
    if (n_ > 4096) return;
    cache_.reserve(n_);
    for (std::uint64_t i = 0; i < n_; ++i)
      cache_.push_back(make(std::make_shared<std::uint64_t>(i)));
  }

  Elem wrap(std::uint64_t v) const {
    if (!cache_.empty()) return cache_[v];
    return make(std::make_shared<std::uint64_t>(v));
  }

  std::uint64_t value(const Elem& a) const {
    require_mine(a);
    return a.payload<std::uint64_t>();
  }

  Elem zero() const override { return wrap(0); }
  Elem one() const override { return wrap(1 % n_); }
  Elem from_int(const BigInt& n) const override {
    BigInt m = n % BigInt(n_);
    if (m < 0) m += n_;
    return wrap(static_cast<std::uint64_t>(m));
  }
  Elem add(const Elem& a, const Elem& b) const override {
    return wrap((value(a) + value(b)) % n_);
  }
  Elem neg(const Elem& a) const override {
    std::uint64_t v = value(a);
    return wrap(v == 0 ? 0 : n_ - v);
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    return wrap((value(a) * value(b)) % n_);
  }
  bool eq(const Elem& a, const Elem& b) const override {
    return value(a) == value(b);
  }
  Elem sample(Rng& rng) const override { return wrap(rng.below(n_)); }
  std::uint64_t enum_size() const override { return n_; }
  Elem enum_at(std::uint64_t index) const override { return wrap(index); }
  std::string show(const Elem& a) const override {
    return std::to_string(value(a));
  }
  nlohmann::json to_json(const Elem& a) const override { return value(a); }

 private:
  std::uint64_t n_;
  std::vector<Elem> cache_;
};

// ---------------------------------------------------------------------------
// R[y], y central

class PolyRing final : public Ring {
 public:
  explicit PolyRing(RingPtr base)
      : Ring("Poly(" + base->name() + ",y)",
             RingCaps{false, base->caps().exact_equality,
                      base->caps().characteristic}),
        base_(std::move(base)) {}

  using Coeffs = std::vector<Elem>;

  Elem wrap(Coeffs v) const {
    if (base_->caps().exact_equality) {
      while (!v.empty() && base_->eq(v.back(), base_->zero())) v.pop_back();
    }
    return make(std::make_shared<Coeffs>(std::move(v)));
  }

  const Coeffs& coeffs(const Elem& a) const {
    require_mine(a);
    return a.payload<Coeffs>();
  }

  const RingPtr& base() const { return base_; }

  Elem var() const { return wrap({base_->zero(), base_->one()}); }

  Elem zero() const override { return wrap({}); }
  Elem one() const override { return wrap({base_->one()}); }
  Elem from_int(const BigInt& n) const override {
    return wrap({base_->from_int(n)});
  }

  Elem add(const Elem& a, const Elem& b) const override {
    const Coeffs& x = coeffs(a);
    const Coeffs& y = coeffs(b);
    Coeffs out(std::max(x.size(), y.size()), base_->zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < x.size() && i < y.size())
        out[i] = x[i] + y[i];
      else
        out[i] = i < x.size() ? x[i] : y[i];
    }
    return wrap(std::move(out));
  }

  Elem neg(const Elem& a) const override {
    Coeffs out = coeffs(a);
    for (auto& c : out) c = -c;
    return wrap(std::move(out));
  }

  Elem mul(const Elem& a, const Elem& b) const override {
    const Coeffs& x = coeffs(a);
    const Coeffs& y = coeffs(b);
    if (x.empty() || y.empty()) return zero();
    Coeffs out(x.size() + y.size() - 1, base_->zero());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        out[i + j] = out[i + j] + x[i] * y[j];
    return wrap(std::move(out));
  }

  bool eq(const Elem& a, const Elem& b) const override {
    if (!caps().exact_equality) throw WindowedEqualityError(name());
    return compare(a, b, 0, true);
  }
  bool eq_window(const Elem& a, const Elem& b, unsigned w) const override {
    return compare(a, b, w, false);
  }

  Elem sample(Rng& rng) const override {
    std::size_t deg = rng.below(4);
    Coeffs out;
    out.reserve(deg + 1);
    for (std::size_t i = 0; i <= deg; ++i) out.push_back(base_->sample(rng));
    return wrap(std::move(out));
  }

  std::string show(const Elem& a) const override {
    const Coeffs& c = coeffs(a);
    std::ostringstream out;
    bool first = true;
    for (std::size_t idx = c.size(); idx-- > 0;) {
      if (base_->caps().exact_equality && base_->eq(c[idx], base_->zero()))
        continue;
      if (!first) out << " + ";
      first = false;
      std::string s = coeff_str(base_->show(c[idx]));
      if (idx == 0) {
        out << s;
      } else {
        if (s != "1") out << s << "*";
        out << "y";
        if (idx > 1) out << "^" << idx;
      }
    }
    if (first) return "0";
    return out.str();
  }

  nlohmann::json to_json(const Elem& a) const override {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs(a)) arr.push_back(base_->to_json(c));
    return arr;
  }

 private:
  bool compare(const Elem& a, const Elem& b, unsigned w, bool exact) const {
    const Coeffs& x = coeffs(a);
    const Coeffs& y = coeffs(b);
    std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Elem& xi = i < x.size() ? x[i] : base_->zero();
      const Elem& yi = i < y.size() ? y[i] : base_->zero();
      bool same = exact ? base_->eq(xi, yi) : eq_at(xi, yi, w);
      if (!same) return false;
    }
    return true;
  }

  RingPtr base_;
};

// ---------------------------------------------------------------------------
// M_k(R)

class MatrixRing final : public Ring {
 public:
  MatrixRing(RingPtr base, unsigned k)
      : Ring("M" + std::to_string(k) + "(" + base->name() + ")",
             RingCaps{base->caps().enumerable, base->caps().exact_equality,
                      base->caps().characteristic}),
        base_(std::move(base)),
        k_(k) {}

  using Entries = std::vector<Elem>;  // row-major, k*k

  Elem wrap(Entries v) const {
    return make(std::make_shared<Entries>(std::move(v)));
  }

  const Entries& entries(const Elem& a) const {
    require_mine(a);
    return a.payload<Entries>();
  }

  unsigned dim() const { return k_; }
  const RingPtr& base() const { return base_; }

  Elem zero() const override {
    return wrap(Entries(std::size_t(k_) * k_, base_->zero()));
  }
  Elem one() const override { return scalar(base_->one()); }
  Elem from_int(const BigInt& n) const override {
    return scalar(base_->from_int(n));
  }

  Elem scalar(const Elem& d) const {
    Entries out(std::size_t(k_) * k_, base_->zero());
    for (unsigned i = 0; i < k_; ++i) out[std::size_t(i) * k_ + i] = d;
    return wrap(std::move(out));
  }

  Elem add(const Elem& a, const Elem& b) const override {
    const Entries& x = entries(a);
    const Entries& y = entries(b);
    Entries out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return wrap(std::move(out));
  }

  Elem neg(const Elem& a) const override {
    Entries out = entries(a);
    for (auto& e : out) e = -e;
    return wrap(std::move(out));
  }

  Elem mul(const Elem& a, const Elem& b) const override {
    const Entries& x = entries(a);
    const Entries& y = entries(b);
    Entries out(std::size_t(k_) * k_, base_->zero());
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned l = 0; l < k_; ++l) {
        const Elem& xil = x[std::size_t(i) * k_ + l];
        for (unsigned j = 0; j < k_; ++j)
          out[std::size_t(i) * k_ + j] =
              out[std::size_t(i) * k_ + j] + xil * y[std::size_t(l) * k_ + j];
      }
    return wrap(std::move(out));
  }

  bool eq(const Elem& a, const Elem& b) const override {
    if (!caps().exact_equality) throw WindowedEqualityError(name());
    const Entries& x = entries(a);
    const Entries& y = entries(b);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!base_->eq(x[i], y[i])) return false;
    return true;
  }
  bool eq_window(const Elem& a, const Elem& b, unsigned w) const override {
    const Entries& x = entries(a);
    const Entries& y = entries(b);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!eq_at(x[i], y[i], w)) return false;
    return true;
  }

  Elem sample(Rng& rng) const override {
    Entries out;
    out.reserve(std::size_t(k_) * k_);
    for (std::size_t i = 0; i < std::size_t(k_) * k_; ++i)
      out.push_back(base_->sample(rng));
    return wrap(std::move(out));
  }

  std::uint64_t enum_size() const override {
    std::uint64_t s = base_->enum_size();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k_ * k_; ++i) {
      if (s != 0 && total > std::numeric_limits<std::uint64_t>::max() / s)
        throw BudgetExceededError(0, std::numeric_limits<std::uint64_t>::max());
      total *= s;
    }
    return total;
  }

  Elem enum_at(std::uint64_t index) const override {
    std::uint64_t s = base_->enum_size();
    Entries out;
    out.reserve(std::size_t(k_) * k_);
    for (unsigned i = 0; i < k_ * k_; ++i) {
      out.push_back(base_->enum_at(index % s));
      index /= s;
    }
    return wrap(std::move(out));
  }

  std::string show(const Elem& a) const override {
    const Entries& x = entries(a);
    std::ostringstream out;
    out << "[";
    for (unsigned i = 0; i < k_; ++i) {
      if (i) out << ", ";
      out << "[";
      for (unsigned j = 0; j < k_; ++j) {
        if (j) out << ", ";
        out << base_->show(x[std::size_t(i) * k_ + j]);
      }
      out << "]";
    }
    out << "]";
    return out.str();
  }

  nlohmann::json to_json(const Elem& a) const override {
    const Entries& x = entries(a);
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned i = 0; i < k_; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (unsigned j = 0; j < k_; ++j)
        row.push_back(base_->to_json(x[std::size_t(i) * k_ + j]));
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  RingPtr base_;
  unsigned k_;
};

const PolyRing& as_poly(const RingPtr& ring) {
  const auto* p = dynamic_cast<const PolyRing*>(ring.get());
  if (!p) throw Error("expected a polynomial ring, got '" + ring->name() + "'");
  return *p;
}

const MatrixRing& as_matrix(const RingPtr& ring) {
  const auto* p = dynamic_cast<const MatrixRing*>(ring.get());
  if (!p) throw Error("expected a matrix ring, got '" + ring->name() + "'");
  return *p;
}

}  // namespace

// ---------------------------------------------------------------------------
// constructors and typed access

RingPtr integer_ring() {
  return intern_ring("Z", [] {
    auto r = std::make_shared<IntegerRing>();
    r->init_cache();
    return r;
  });
}

RingPtr mod_ring(std::uint64_t n) {
  if (n == 0) throw Error("Z/n requires n >= 1");
  if (n > (std::uint64_t(1) << 32))
    throw Error("Z/n supports n up to 2^32");
  return intern_ring("Z/" + std::to_string(n), [n] {
    auto r = std::make_shared<ModRing>(n);
    r->init_cache();
    return r;
  });
}

RingPtr poly_ring(RingPtr base) {
  std::string name = "Poly(" + base->name() + ",y)";
  return intern_ring(name,
                     [&base] { return std::make_shared<PolyRing>(base); });
}

RingPtr matrix_ring(RingPtr base, unsigned k) {
  if (k == 0) throw Error("matrix ring requires k >= 1");
  std::string name = "M" + std::to_string(k) + "(" + base->name() + ")";
  return intern_ring(
      name, [&base, k] { return std::make_shared<MatrixRing>(base, k); });
}

bool is_integer_ring(const RingPtr& ring) {
  return dynamic_cast<const IntegerRing*>(ring.get()) != nullptr;
}
bool is_mod_ring(const RingPtr& ring) {
  return dynamic_cast<const ModRing*>(ring.get()) != nullptr;
}
bool is_poly_ring(const RingPtr& ring) {
  return dynamic_cast<const PolyRing*>(ring.get()) != nullptr;
}
bool is_matrix_ring(const RingPtr& ring) {
  return dynamic_cast<const MatrixRing*>(ring.get()) != nullptr;
}

BigInt int_value(const Elem& a) {
  const auto* r = dynamic_cast<const IntegerRing*>(a.ring_ptr().get());
  if (!r) throw Error("int_value: not an integer-ring element");
  return a.payload<BigInt>();
}

Elem int_elem(const BigInt& n) { return integer_ring()->from_int(n); }

std::uint64_t mod_value(const Elem& a) {
  const auto* r = dynamic_cast<const ModRing*>(a.ring_ptr().get());
  if (!r) throw Error("mod_value: not a Z/n element");
  return a.payload<std::uint64_t>();
}

const std::vector<Elem>& poly_coeffs(const Elem& a) {
  return as_poly(a.ring_ptr()).coeffs(a);
}

Elem poly_from_coeffs(const RingPtr& poly, std::vector<Elem> coeffs) {
  return as_poly(poly).wrap(std::move(coeffs));
}

Elem poly_var(const RingPtr& poly) { return as_poly(poly).var(); }

RingPtr poly_base(const RingPtr& poly) { return as_poly(poly).base(); }

unsigned poly_degree(const Elem& a) {
  const auto& c = poly_coeffs(a);
  return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1);
}

bool poly_is_constant(const Elem& a) { return poly_coeffs(a).size() <= 1; }

Elem poly_coeff_at(const Elem& a, unsigned i) {
  const auto& c = poly_coeffs(a);
  const auto& base = as_poly(a.ring_ptr()).base();
  return i < c.size() ? c[i] : base->zero();
}

unsigned matrix_dim(const RingPtr& mat) { return as_matrix(mat).dim(); }

RingPtr matrix_base(const RingPtr& mat) { return as_matrix(mat).base(); }

const std::vector<Elem>& matrix_entries(const Elem& a) {
  return as_matrix(a.ring_ptr()).entries(a);
}

Elem matrix_from_entries(const RingPtr& mat, std::vector<Elem> entries) {
  const auto& m = as_matrix(mat);
  if (entries.size() != std::size_t(m.dim()) * m.dim())
    throw Error("matrix_from_entries: wrong entry count");
  return m.wrap(std::move(entries));
}

Elem matrix_entry(const Elem& a, unsigned i, unsigned j) {
  const auto& m = as_matrix(a.ring_ptr());
  return m.entries(a)[std::size_t(i) * m.dim() + j];
}

// ---------------------------------------------------------------------------
// named maps

SigmaDerivation poly_differentiation(const RingPtr& poly) {
  const auto& pr = as_poly(poly);
  const RingPtr base = pr.base();
  RingPtr handle = poly;
  auto rule = [handle, base](const Elem& a) {
    const auto& c = poly_coeffs(a);
    std::vector<Elem> out;
    for (std::size_t i = 1; i < c.size(); ++i)
      out.push_back(base->from_int(BigInt(i)) * c[i]);
    return poly_from_coeffs(handle, std::move(out));
  };
  return SigmaDerivation(poly, identity_endo(poly), "d_dy", rule);
}

EndoMap poly_const_term(const RingPtr& poly) {
  RingPtr handle = poly;
  auto rule = [handle](const Elem& a) {
    const auto& c = poly_coeffs(a);
    std::vector<Elem> out;
    if (!c.empty()) out.push_back(c[0]);
    return poly_from_coeffs(handle, std::move(out));
  };
  return EndoMap(poly, "const_term", rule);
}

SigmaDerivation poly_coeff_shift(const RingPtr& poly) {
  RingPtr handle = poly;
  auto rule = [handle](const Elem& a) {
    const auto& c = poly_coeffs(a);
    std::vector<Elem> out(c.begin() + (c.empty() ? 0 : 1), c.end());
    return poly_from_coeffs(handle, std::move(out));
  };
  return SigmaDerivation(poly, poly_const_term(poly), "coeff_shift", rule);
}

EndoMap poly_y_negate(const RingPtr& poly) {
  RingPtr handle = poly;
  auto rule = [handle](const Elem& a) {
    std::vector<Elem> out = poly_coeffs(a);
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return poly_from_coeffs(handle, std::move(out));
  };
  EndoMap sigma(poly, "y_negate", rule);
  sigma.injective_claimed = true;
  sigma.surjective_claimed = true;
  sigma.set_inverse(EndoMap(poly, "y_negate", rule));
  return sigma;
}

EndoMap matrix_entrywise(const RingPtr& mat, const EndoMap& inner) {
  const auto& m = as_matrix(mat);
  if (inner.domain().get() != m.base().get())
    throw Error("entrywise lift: inner map domain must be the entry ring");
  RingPtr handle = mat;
  EndoMap inner_copy = inner;
  auto rule = [handle, inner_copy](const Elem& a) {
    std::vector<Elem> out = matrix_entries(a);
    for (auto& e : out) e = inner_copy(e);
    return matrix_from_entries(handle, std::move(out));
  };
  EndoMap lifted(mat, "entrywise(" + inner.name() + ")", rule);
  lifted.injective_claimed = inner.injective_claimed;
  lifted.surjective_claimed = inner.surjective_claimed;
  if (inner.has_inverse()) {
    EndoMap innerinv = inner.inverse();
    auto invrule = [handle, innerinv](const Elem& a) {
      std::vector<Elem> out = matrix_entries(a);
      for (auto& e : out) e = innerinv(e);
      return matrix_from_entries(handle, std::move(out));
    };
    lifted.set_inverse(
        EndoMap(mat, "entrywise(" + innerinv.name() + ")", invrule));
  }
  return lifted;
}

EndoMap matrix_inner_automorphism(const RingPtr& mat, std::uint64_t seed) {
  as_matrix(mat);
  if (!mat->caps().enumerable)
    throw Error("inner automorphism sampling needs an enumerable matrix ring");
  std::uint64_t size = mat->enum_size();
  Rng rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Elem u = mat->sample(rng);
    for (std::uint64_t i = 0; i < size; ++i) {
      Elem v = mat->enum_at(i);
      if (mat->eq(u * v, mat->one()) && mat->eq(v * u, mat->one())) {
        RingPtr handle = mat;
        auto rule = [handle, u, v](const Elem& a) { return u * a * v; };
        auto inv = [handle, u, v](const Elem& a) { return v * a * u; };
        EndoMap sigma(mat, "inner:" + mat->show(u), rule);
        sigma.injective_claimed = true;
        sigma.surjective_claimed = true;
        sigma.set_inverse(EndoMap(mat, "inner_inv:" + mat->show(u), inv));
        return sigma;
      }
    }
  }
  throw Error("no invertible matrix found while sampling inner automorphism");
}

}  // namespace orelab
