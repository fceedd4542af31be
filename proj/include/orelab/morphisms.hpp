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

#ifndef ORELAB_MORPHISMS_HPP
#define ORELAB_MORPHISMS_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "orelab/report.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// A ring endomorphism sigma : R -> R, carried as a named total function.
/// The laws (additive, multiplicative, unit-preserving) are not decidable
/// for arbitrary rules; check_endomorphism samples them.
class EndoMap {
 public:
  EndoMap() = default;
  EndoMap(RingPtr domain, std::string name,
          std::function<Elem(const Elem&)> rule)
      : domain_(std::move(domain)),
        name_(std::move(name)),
        rule_(std::move(rule)) {}

  bool valid() const { return static_cast<bool>(rule_); }
  const RingPtr& domain() const { return domain_; }
  const std::string& name() const { return name_; }

  Elem operator()(const Elem& a) const { return rule_(a); }

  /// n-fold composition.
  Elem power(const Elem& a, unsigned n) const {
    Elem r = a;
    for (unsigned i = 0; i < n; ++i) r = rule_(r);
    return r;
  }

  bool injective_claimed = false;
  bool surjective_claimed = false;

  void set_inverse(EndoMap inv) {
    inverse_ = std::make_shared<EndoMap>(std::move(inv));
  }
  bool has_inverse() const { return inverse_ != nullptr; }
  const EndoMap& inverse() const;

  /// Two handles are interchangeable when they name the same map on the
  /// same ring handle. Used for skew-series compatibility checks.
  bool same_as(const EndoMap& other) const {
    return domain_.get() == other.domain_.get() && name_ == other.name_;
  }

 private:
  RingPtr domain_;
  std::string name_;
  std::function<Elem(const Elem&)> rule_;
  std::shared_ptr<EndoMap> inverse_;
};

/// A sigma-derivation delta : R -> R, i.e. an additive map with
/// delta(rs) = delta(r) s + sigma(r) delta(s).
class SigmaDerivation {
 public:
  SigmaDerivation() = default;
  SigmaDerivation(RingPtr domain, EndoMap sigma, std::string name,
                  std::function<Elem(const Elem&)> rule)
      : domain_(std::move(domain)),
        sigma_(std::move(sigma)),
        name_(std::move(name)),
        rule_(std::move(rule)) {}

  bool valid() const { return static_cast<bool>(rule_); }
  const RingPtr& domain() const { return domain_; }
  const EndoMap& sigma() const { return sigma_; }
  const std::string& name() const { return name_; }

  Elem operator()(const Elem& a) const { return rule_(a); }

 private:
  RingPtr domain_;
  EndoMap sigma_;
  std::string name_;
  std::function<Elem(const Elem&)> rule_;
};

/// The identity endomorphism (an automorphism, its own inverse).
EndoMap identity_endo(RingPtr ring);

/// The zero map as a sigma-derivation; lawful for every sigma.
SigmaDerivation zero_derivation(RingPtr ring, EndoMap sigma);

/// Samples `count` triples and reports each ring axiom: associativity of +
/// and *, commutativity of +, both distributive laws, additive/multiplicative
/// units and additive inverses. A failing axiom is a failing check entry,
/// never an exception. `window` bounds comparisons on windowed rings.
Report ring_axioms_check(const RingPtr& ring, std::uint64_t seed,
                         unsigned count, unsigned window = 16);

/// Samples pairs and verifies sigma(a+b)=sigma(a)+sigma(b),
/// sigma(ab)=sigma(a)sigma(b) and sigma(1)=1. When an inverse is registered,
/// also verifies both round trips on samples.
Report check_endomorphism(const EndoMap& sigma, std::uint64_t seed,
                          unsigned count, unsigned window = 16);

/// Samples pairs and verifies additivity and the twisted Leibniz law
/// delta(rs) = delta(r) s + sigma(r) delta(s).
Report check_sigma_derivation(const SigmaDerivation& delta, std::uint64_t seed,
                              unsigned count, unsigned window = 16);

}  // namespace orelab

#endif  // ORELAB_MORPHISMS_HPP
