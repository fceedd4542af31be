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

#ifndef ORELAB_MODULE_MAP_HPP
#define ORELAB_MODULE_MAP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "orelab/ore_poly.hpp"
#include "orelab/report.hpp"
#include "orelab/ring.hpp"

namespace orelab {

/// Module side convention. Right: the map is v -> M v on column vectors of a
/// right module (homomorphisms written on the left). Left: v -> v M on row
/// vectors of a left module (written on the right). The side is an explicit
/// field, never inferred.
enum class Side { Left, Right };

class ModuleMap {
 public:
  ModuleMap(RingPtr ring, unsigned rows, unsigned cols,
            std::vector<Elem> matrix, Side side);

  const RingPtr& ring() const { return ring_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  Side side() const { return side_; }

  unsigned source_dim() const {
    return side_ == Side::Right ? cols_ : rows_;
  }
  unsigned target_dim() const {
    return side_ == Side::Right ? rows_ : cols_;
  }

  const Elem& at(unsigned i, unsigned j) const {
    return matrix_.at(std::size_t(i) * cols_ + j);
  }

  /// Coefficient of source coordinate s in target coordinate t.
  const Elem& action_entry(unsigned t, unsigned s) const {
    return side_ == Side::Right ? at(t, s) : at(s, t);
  }

 private:
  RingPtr ring_;
  unsigned rows_, cols_;
  std::vector<Elem> matrix_;
  Side side_;
};

/// Matrix action respecting the side convention.
std::vector<Elem> apply_map(const ModuleMap& f, const std::vector<Elem>& v);

/// Composition g after f (dimensions checked; sides must match).
std::vector<Elem> apply_composed(const ModuleMap& g, const ModuleMap& f,
                                 const std::vector<Elem>& v);

struct InjectivityResult {
  bool injective = false;
  /// A colliding domain pair when not injective.
  std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> collision;
  std::uint64_t evaluations = 0;
};

struct SurjectivityResult {
  bool surjective = false;
  /// An unreached target when not surjective.
  std::optional<std::vector<Elem>> unreached;
  std::uint64_t evaluations = 0;
};

/// Exact decision by exhaustive domain enumeration (enumerable rings).
/// Throws BudgetExceededError when |R|^n exceeds the budget.
InjectivityResult brute_injective(const ModuleMap& f,
                                  std::uint64_t budget = 1000000);

/// Exact decision; enumerates the domain image and then the target space.
SurjectivityResult brute_surjective(const ModuleMap& f,
                                    std::uint64_t budget = 1000000);

enum class SearchOutcome {
  Found,
  NoneDefinitive,      // exhaustive candidate sweep completed
  NoneWithinBudget,    // randomized mode only
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NoneWithinBudget;
  std::optional<ModuleMap> witness;
  std::uint64_t candidates_examined = 0;
};

/// Searches for an injective module map R^n -> R^m. Runs exhaustively over
/// all candidate matrices when the total evaluation estimate fits the
/// budget (definitive answers); otherwise falls back to seeded random
/// trials.
SearchResult search_mono(const RingPtr& ring, unsigned n, unsigned m,
                         Side side = Side::Right,
                         std::uint64_t budget = 1000000,
                         std::uint64_t seed = 0, unsigned random_trials = 500);

/// Same search for a surjective map R^n -> R^m.
SearchResult search_epi(const RingPtr& ring, unsigned n, unsigned m,
                        Side side = Side::Right,
                        std::uint64_t budget = 1000000,
                        std::uint64_t seed = 0, unsigned random_trials = 500);

/// Kernel vectors with integer-polynomial entries of degree <= D, for maps
/// over Z[y] (Poly(Z, y)): expanding coefficients turns f(v) = 0 into a
/// finite homogeneous rational system; returns an integer basis of its
/// solution space (primitive, sign-normalized), possibly empty.
std::vector<std::vector<Elem>> bounded_degree_kernel(const ModuleMap& f,
                                                     unsigned degree);

/// The kernel-transport pipeline for a right map f over an Ore extension
/// whose entries sit in filtration level <= k, an element a in ker(sigma)
/// that is not a left zero divisor (caller-asserted), and a candidate base
/// vector b: checks that psi(r) := f(a^k r) collapses into base vectors,
/// that psi(b) = 0, that a^k b != 0, and that f(a^k b) = 0.
Report prop112_witness(const ModuleMap& f, const Elem& a, unsigned k,
                       const std::vector<Elem>& b, std::uint64_t seed = 0,
                       unsigned count = 20);

}  // namespace orelab

#endif  // ORELAB_MODULE_MAP_HPP
