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

#include "orelab/sequence_ring.hpp"

#include <numeric>
#include <sstream>

namespace orelab {
namespace {

constexpr std::size_t kPeriodCap = 64;

struct SeqVal {
  std::vector<Elem> prefix;
  std::vector<Elem> period;  // never empty
};

class SequenceRing final : public Ring {
 public:
  explicit SequenceRing(RingPtr base)
      : Ring("P(" + base->name() + ")",
             RingCaps{false, false, base->caps().characteristic}),
        base_(std::move(base)) {}

  const RingPtr& base() const { return base_; }

  const SeqVal& value(const Elem& a) const {
    require_mine(a);
    return a.payload<SeqVal>();
  }

  Elem entry(const SeqVal& v, std::size_t i) const {
    if (i < v.prefix.size()) return v.prefix[i];
    return v.period[(i - v.prefix.size()) % v.period.size()];
  }

  Elem wrap(SeqVal v) const {
    if (v.period.empty()) throw Error("sequence tail must be nonempty");
    if (v.period.size() > kPeriodCap)
      throw Error("sequence left the representable class: period " +
                  std::to_string(v.period.size()) + " exceeds cap " +
                  std::to_string(kPeriodCap));
    normalize(v);
    return make(std::make_shared<SeqVal>(std::move(v)));
  }

  Elem zero() const override {
    return wrap(SeqVal{{}, {base_->zero()}});
  }
  Elem one() const override { return wrap(SeqVal{{}, {base_->one()}}); }
  Elem from_int(const BigInt& n) const override {
    return wrap(SeqVal{{}, {base_->from_int(n)}});
  }

  Elem add(const Elem& a, const Elem& b) const override {
    return pointwise(a, b, [](const Elem& x, const Elem& y) { return x + y; });
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    return pointwise(a, b, [](const Elem& x, const Elem& y) { return x * y; });
  }
  Elem neg(const Elem& a) const override {
    SeqVal v = value(a);
    for (auto& e : v.prefix) e = -e;
    for (auto& e : v.period) e = -e;
    return wrap(std::move(v));
  }

  bool eq_window(const Elem& a, const Elem& b, unsigned w) const override {
    const SeqVal& x = value(a);
    const SeqVal& y = value(b);
    for (unsigned i = 0; i < w; ++i)
      if (!eq_at(entry(x, i), entry(y, i), w)) return false;
    return true;
  }

  Elem sample(Rng& rng) const override {
    SeqVal v;
    std::size_t np = rng.below(3);
    for (std::size_t i = 0; i < np; ++i) v.prefix.push_back(base_->sample(rng));
    std::size_t nt = 1 + rng.below(3);
    for (std::size_t i = 0; i < nt; ++i) v.period.push_back(base_->sample(rng));
    return wrap(std::move(v));
  }

  std::string show(const Elem& a) const override {
    const SeqVal& v = value(a);
    std::ostringstream out;
    out << "prefix [";
    for (std::size_t i = 0; i < v.prefix.size(); ++i) {
      if (i) out << ", ";
      out << base_->show(v.prefix[i]);
    }
    out << "] then ";
    if (v.period.size() == 1) {
      out << "const " << base_->show(v.period[0]);
    } else {
      out << "period [";
      for (std::size_t i = 0; i < v.period.size(); ++i) {
        if (i) out << ", ";
        out << base_->show(v.period[i]);
      }
      out << "]";
    }
    return out.str();
  }

  nlohmann::json to_json(const Elem& a) const override {
    const SeqVal& v = value(a);
    nlohmann::json pre = nlohmann::json::array();
    for (const auto& e : v.prefix) pre.push_back(base_->to_json(e));
    nlohmann::json per = nlohmann::json::array();
    for (const auto& e : v.period) per.push_back(base_->to_json(e));
    return nlohmann::json{{"prefix", pre}, {"period", per}};
  }

 private:
  template <class Op>
  Elem pointwise(const Elem& a, const Elem& b, Op op) const {
    const SeqVal& x = value(a);
    const SeqVal& y = value(b);
    std::size_t np = std::max(x.prefix.size(), y.prefix.size());
    std::size_t nt = std::lcm(x.period.size(), y.period.size());
    if (nt > kPeriodCap)
      throw Error("sequence left the representable class: lcm period " +
                  std::to_string(nt) + " exceeds cap " +
                  std::to_string(kPeriodCap));
    SeqVal out;
    out.prefix.reserve(np);
    for (std::size_t i = 0; i < np; ++i)
      out.prefix.push_back(op(entry(x, i), entry(y, i)));
    out.period.reserve(nt);
    for (std::size_t i = 0; i < nt; ++i)
      out.period.push_back(op(entry(x, np + i), entry(y, np + i)));
    return wrap(std::move(out));
  }

  // Cosmetic canonicalization when the base supports exact equality: shrink
  // the period to its smallest cycle and fold prefix entries that already
  // match the tail. Windowed equality does not depend on this.
  void normalize(SeqVal& v) const {
    if (!base_->caps().exact_equality) return;
    for (std::size_t d = 1; d < v.period.size(); ++d) {
      if (v.period.size() % d != 0) continue;
      bool ok = true;
      for (std::size_t i = d; i < v.period.size() && ok; ++i)
        ok = base_->eq(v.period[i], v.period[i % d]);
      if (ok) {
        v.period.resize(d);
        break;
      }
    }
    while (!v.prefix.empty()) {
      // last prefix entry coincides with the tail entry one period back
      const Elem& tail_here =
          v.period[(v.period.size() - 1) % v.period.size()];
      if (!base_->eq(v.prefix.back(), tail_here)) break;
      std::rotate(v.period.begin(), v.period.end() - 1, v.period.end());
      v.prefix.pop_back();
    }
  }

  RingPtr base_;
};

const SequenceRing& as_seq(const RingPtr& ring) {
  const auto* p = dynamic_cast<const SequenceRing*>(ring.get());
  if (!p) throw Error("expected a sequence ring, got '" + ring->name() + "'");
  return *p;
}

}  // namespace

RingPtr seq_ring(RingPtr base) {
  std::string name = "P(" + base->name() + ")";
  return intern_ring(name,
                     [&base] { return std::make_shared<SequenceRing>(base); });
}

bool is_seq_ring(const RingPtr& ring) {
  return dynamic_cast<const SequenceRing*>(ring.get()) != nullptr;
}

RingPtr seq_base(const RingPtr& ring) { return as_seq(ring).base(); }

Elem seq_make(const RingPtr& ring, std::vector<Elem> prefix,
              std::vector<Elem> period) {
  return as_seq(ring).wrap({std::move(prefix), std::move(period)});
}

Elem seq_const(const RingPtr& ring, const Elem& c) {
  return as_seq(ring).wrap({{}, {c}});
}

Elem seq_entry(const Elem& a, std::size_t i) {
  const auto& r = as_seq(a.ring_ptr());
  return r.entry(r.value(a), i);
}

const std::vector<Elem>& seq_prefix(const Elem& a) {
  return as_seq(a.ring_ptr()).value(a).prefix;
}

const std::vector<Elem>& seq_period(const Elem& a) {
  return as_seq(a.ring_ptr()).value(a).period;
}

Elem seq_prepend(const Elem& head, const Elem& a) {
  const auto& r = as_seq(a.ring_ptr());
  std::vector<Elem> prefix;
  prefix.push_back(head);
  prefix.insert(prefix.end(), r.value(a).prefix.begin(),
                r.value(a).prefix.end());
  return seq_make(a.ring_ptr(), std::move(prefix), r.value(a).period);
}

EndoMap seq_shift_endo(const RingPtr& ring) {
  const auto& r = as_seq(ring);
  (void)r;
  RingPtr handle = ring;
  auto rule = [handle](const Elem& a) {
    const auto& prefix = seq_prefix(a);
    const auto& period = seq_period(a);
    if (!prefix.empty())
      return seq_make(handle,
                      std::vector<Elem>(prefix.begin() + 1, prefix.end()),
                      period);
    std::vector<Elem> rotated(period.begin() + 1, period.end());
    rotated.push_back(period.front());
    return seq_make(handle, {}, std::move(rotated));
  };
  EndoMap sigma(ring, "shift", rule);
  sigma.injective_claimed = false;
  sigma.surjective_claimed = true;
  return sigma;
}

}  // namespace orelab
