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

#ifndef ORELAB_ORE_POLY_HPP
#define ORELAB_ORE_POLY_HPP

#include <memory>
#include <vector>

#include "orelab/morphisms.hpp"
#include "orelab/report.hpp"
#include "orelab/ring.hpp"
#include "orelab/rings_basic.hpp"

namespace orelab {

class OreRing;
using OreRingPtr = std::shared_ptr<const OreRing>;

/// The data of an Ore extension base[x; sigma, delta]. Construction samples
/// the endomorphism and sigma-derivation laws (they are not decidable for
/// arbitrary rules) and throws when a sampled law fails.
class OreRing {
 public:
  static OreRingPtr make(RingPtr base, EndoMap sigma, SigmaDerivation delta,
                         unsigned law_check_count = 100,
                         std::uint64_t law_check_seed = 0);

  const RingPtr& base() const { return base_; }
  const EndoMap& sigma() const { return sigma_; }
  const SigmaDerivation& delta() const { return delta_; }
  const std::string& name() const { return name_; }

 private:
  OreRing(RingPtr base, EndoMap sigma, SigmaDerivation delta,
          std::string name);
  RingPtr base_;
  EndoMap sigma_;
  SigmaDerivation delta_;
  std::string name_;
};

/// A left polynomial sum r_i x^i with coefficients written on the left,
/// ascending storage, trailing zeros stripped (over exact bases). The
/// multiplication is generated by  x r = sigma(r) x + delta(r).
class OrePoly {
 public:
  OrePoly() = default;
  OrePoly(OreRingPtr ring, std::vector<Elem> coeffs);

  static OrePoly zero(OreRingPtr ring);
  static OrePoly one(OreRingPtr ring);
  static OrePoly constant(OreRingPtr ring, const Elem& r);
  static OrePoly variable(OreRingPtr ring);  // the element x

  bool valid() const { return ring_ != nullptr; }
  const OreRingPtr& ring() const { return ring_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the canonical form; 0 for the zero polynomial (which carries
  /// its own flag, see is_zero).
  unsigned degree() const {
    return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1);
  }
  Elem coeff_at(unsigned i) const;

 private:
  OreRingPtr ring_;
  std::vector<Elem> coeffs_;
};

OrePoly ore_add(const OrePoly& p, const OrePoly& q);
OrePoly ore_neg(const OrePoly& p);
OrePoly ore_sub(const OrePoly& p, const OrePoly& q);

/// Product in canonical left form, by expanding x^n r through n-fold
/// application of the generating rule.
OrePoly ore_mul(const OrePoly& p, const OrePoly& q);

/// r * p, scaling every left coefficient.
OrePoly ore_scale_left(const Elem& r, const OrePoly& p);

/// x * p in one step of the rule.
OrePoly ore_mul_x_left(const OrePoly& p);

OrePoly ore_pow(const OrePoly& p, unsigned n);

/// Coefficientwise equality; `window` applies when the base ring has
/// windowed equality.
bool ore_eq(const OrePoly& p, const OrePoly& q, unsigned window = 16);

std::string ore_show(const OrePoly& p);
nlohmann::json ore_to_json(const OrePoly& p);

OrePoly operator+(const OrePoly& p, const OrePoly& q);
OrePoly operator-(const OrePoly& p, const OrePoly& q);
OrePoly operator*(const OrePoly& p, const OrePoly& q);
OrePoly operator-(const OrePoly& p);

/// x^n * r as a polynomial; its degree-n coefficient is sigma^n(r).
OrePoly x_power_times(const OreRingPtr& ring, const Elem& r, unsigned n);

struct KernelPowerResult {
  bool in_base = false;
  OrePoly value;
};

/// For a in ker(sigma), computes x^i a^i and reports whether it collapsed
/// into the base ring (it always does; the operation verifies rather than
/// assumes). Throws when sigma(a) != 0.
KernelPowerResult kernel_sigma_power_check(const OreRingPtr& ring,
                                           const Elem& a, unsigned i,
                                           unsigned window = 16);

/// Unique right coefficients [s_0..s_d] with p = sum x^i s_i; requires sigma
/// to carry a registered inverse (automorphism). Exact bases only.
std::vector<Elem> right_coefficients(const OrePoly& p);

/// Reassembly sum x^i s_i, the round-trip oracle for right_coefficients.
OrePoly from_right_coefficients(const OreRingPtr& ring,
                                const std::vector<Elem>& s);

/// Canonical degree filtration U_i = { p : deg p <= i }.
struct Filtration {
  OreRingPtr ring;
  unsigned level(const OrePoly& p) const;
};

unsigned filtration_level(const OrePoly& p);

/// Truncation to degree <= l; idempotent and left-linear over the base.
OrePoly projection_pi(const OrePoly& p, unsigned l);

/// Least natural l with l > n k / (m - n) - 1, i.e. the least l making
/// n (k + l + 1) < m (l + 1). Requires m > n.
std::uint64_t min_filtration_shift(std::uint64_t n, std::uint64_t m,
                                   std::uint64_t k);

/// W_1(R) = R[y][x; id, d/dy].
OreRingPtr weyl_ring(RingPtr coefficients, unsigned law_check_count = 100);

/// Iterated Weyl ring W_n = W_1(W_{n-1}); supported for n <= 3.
OreRingPtr weyl_ring_iterated(RingPtr coefficients, unsigned n,
                              unsigned law_check_count = 100);

/// Verifies x y - y x = 1 and that sampled coefficient-ring elements are
/// central.
Report weyl_relation_check(const OreRingPtr& weyl, std::uint64_t seed,
                           unsigned count);

/// The Ore extension itself as a ring handle, so it can seed further
/// constructions (iterated Weyl rings, module maps over Ore rings).
RingPtr ore_extension_ring(OreRingPtr ring);

bool is_ore_extension_ring(const RingPtr& ring);
OreRingPtr ore_ring_of(const RingPtr& adapter);
const OrePoly& ore_elem_poly(const Elem& e);
Elem ore_elem(const RingPtr& adapter, OrePoly p);

}  // namespace orelab

#endif  // ORELAB_ORE_POLY_HPP
