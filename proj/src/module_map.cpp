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

#include "orelab/module_map.hpp"

#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "orelab/rings_basic.hpp"

namespace orelab {
namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t cap) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && total > cap / base) return std::nullopt;
    total *= base;
  }
  return total;
}

std::vector<Elem> vector_at(const RingPtr& ring, std::uint64_t size,
                            unsigned dim, std::uint64_t index) {
  std::vector<Elem> v;
  v.reserve(dim);
  for (unsigned i = 0; i < dim; ++i) {
    v.push_back(ring->enum_at(index % size));
    index /= size;
  }
  return v;
}

std::string vector_key(const RingPtr& ring, const std::vector<Elem>& v) {
  std::string key;
  for (const auto& e : v) {
    key += ring->key(e);
    key += '|';
  }
  return key;
}

std::string vector_show(const RingPtr& ring, const std::vector<Elem>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += ring->show(v[i]);
  }
  return s + ")";
}

}  // namespace

ModuleMap::ModuleMap(RingPtr ring, unsigned rows, unsigned cols,
                     std::vector<Elem> matrix, Side side)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      matrix_(std::move(matrix)),
      side_(side) {
  if (rows_ == 0 || cols_ == 0) throw Error("module map needs positive dims");
  if (matrix_.size() != std::size_t(rows_) * cols_)
    throw Error("module map matrix has wrong entry count");
  for (const auto& e : matrix_)
    if (e.ring_ptr().get() != ring_.get())
      throw RingMismatchError(ring_->name(), e.ring().name());
}

std::vector<Elem> apply_map(const ModuleMap& f, const std::vector<Elem>& v) {
  if (v.size() != f.source_dim())
    throw Error("apply_map: vector has dimension " + std::to_string(v.size()) +
                ", map expects " + std::to_string(f.source_dim()));
  std::vector<Elem> out(f.target_dim(), f.ring()->zero());
  for (unsigned t = 0; t < f.target_dim(); ++t)
    for (unsigned s = 0; s < f.source_dim(); ++s) {
      // right maps act as M v (entries on the left), left maps as v M
      if (f.side() == Side::Right)
        out[t] = out[t] + f.action_entry(t, s) * v[s];
      else
        out[t] = out[t] + v[s] * f.action_entry(t, s);
    }
  return out;
}

std::vector<Elem> apply_composed(const ModuleMap& g, const ModuleMap& f,
                                 const std::vector<Elem>& v) {
  if (g.side() != f.side()) throw Error("composition mixes side conventions");
  if (f.target_dim() != g.source_dim())
    throw Error("composition dimension mismatch");
  return apply_map(g, apply_map(f, v));
}

InjectivityResult brute_injective(const ModuleMap& f, std::uint64_t budget) {
  const RingPtr& ring = f.ring();
  std::uint64_t size = ring->enum_size();
  auto total = checked_pow(size, f.source_dim(), budget);
  if (!total) throw BudgetExceededError(0, budget);
  InjectivityResult res;
  std::unordered_map<std::string, std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(*total));
  for (std::uint64_t idx = 0; idx < *total; ++idx) {
    std::vector<Elem> v = vector_at(ring, size, f.source_dim(), idx);
    std::vector<Elem> img = apply_map(f, v);
    ++res.evaluations;
    auto [it, fresh] = seen.emplace(vector_key(ring, img), idx);
    if (!fresh) {
      res.injective = false;
      res.collision = {vector_at(ring, size, f.source_dim(), it->second),
                       std::move(v)};
      return res;
    }
  }
  res.injective = true;
  return res;
}

SurjectivityResult brute_surjective(const ModuleMap& f, std::uint64_t budget) {
  const RingPtr& ring = f.ring();
  std::uint64_t size = ring->enum_size();
  auto domain = checked_pow(size, f.source_dim(), budget);
  auto target = checked_pow(size, f.target_dim(), budget);
  if (!domain || !target || *domain > budget - *target)
    throw BudgetExceededError(0, budget);
  SurjectivityResult res;
  std::unordered_set<std::string> reached;
  reached.reserve(static_cast<std::size_t>(*domain));
  for (std::uint64_t idx = 0; idx < *domain; ++idx) {
    std::vector<Elem> v = vector_at(ring, size, f.source_dim(), idx);
    reached.insert(vector_key(ring, apply_map(f, v)));
    ++res.evaluations;
  }
  for (std::uint64_t idx = 0; idx < *target; ++idx) {
    std::vector<Elem> w = vector_at(ring, size, f.target_dim(), idx);
    ++res.evaluations;
    if (reached.find(vector_key(ring, w)) == reached.end()) {
      res.surjective = false;
      res.unreached = std::move(w);
      return res;
    }
  }
  res.surjective = true;
  return res;
}

namespace {

ModuleMap candidate_map(const RingPtr& ring, std::uint64_t size, unsigned n,
                        unsigned m, Side side, std::uint64_t index) {
  // source dim n, target dim m
  unsigned rows = side == Side::Right ? m : n;
  unsigned cols = side == Side::Right ? n : m;
  std::vector<Elem> entries;
  entries.reserve(std::size_t(rows) * cols);
  for (unsigned i = 0; i < rows * cols; ++i) {
    entries.push_back(ring->enum_at(index % size));
    index /= size;
  }
  return ModuleMap(ring, rows, cols, std::move(entries), side);
}

ModuleMap random_map(const RingPtr& ring, unsigned n, unsigned m, Side side,
                     Rng& rng) {
  unsigned rows = side == Side::Right ? m : n;
  unsigned cols = side == Side::Right ? n : m;
  std::vector<Elem> entries;
  entries.reserve(std::size_t(rows) * cols);
  for (unsigned i = 0; i < rows * cols; ++i)
    entries.push_back(ring->sample(rng));
  return ModuleMap(ring, rows, cols, std::move(entries), side);
}

template <class Pred>
SearchResult search_generic(const RingPtr& ring, unsigned n, unsigned m,
                            Side side, std::uint64_t budget,
                            std::uint64_t seed, unsigned random_trials,
                            std::uint64_t per_candidate_evals, Pred pred) {
  std::uint64_t size = ring->enum_size();
  auto candidates = checked_pow(size, n * m, budget);
  SearchResult res;
  bool exhaustive =
      candidates && per_candidate_evals != 0 &&
      *candidates <= budget / per_candidate_evals;
  if (exhaustive) {
    for (std::uint64_t idx = 0; idx < *candidates; ++idx) {
      ModuleMap f = candidate_map(ring, size, n, m, side, idx);
      ++res.candidates_examined;
      if (pred(f)) {
        res.outcome = SearchOutcome::Found;
        res.witness = std::move(f);
        return res;
      }
    }
    res.outcome = SearchOutcome::NoneDefinitive;
    return res;
  }
  Rng rng(seed);
  for (unsigned t = 0; t < random_trials; ++t) {
    ModuleMap f = random_map(ring, n, m, side, rng);
    ++res.candidates_examined;
    if (pred(f)) {
      res.outcome = SearchOutcome::Found;
      res.witness = std::move(f);
      return res;
    }
  }
  res.outcome = SearchOutcome::NoneWithinBudget;
  return res;
}

}  // namespace

SearchResult search_mono(const RingPtr& ring, unsigned n, unsigned m,
                         Side side, std::uint64_t budget, std::uint64_t seed,
                         unsigned random_trials) {
  std::uint64_t size = ring->enum_size();
  auto domain = checked_pow(size, n, budget);
  std::uint64_t per_candidate = domain ? *domain : budget + 1;
  return search_generic(ring, n, m, side, budget, seed, random_trials,
                        per_candidate, [](const ModuleMap& f) {
                          return brute_injective(
                                     f, std::numeric_limits<std::uint64_t>::max())
                              .injective;
                        });
}

SearchResult search_epi(const RingPtr& ring, unsigned n, unsigned m, Side side,
                        std::uint64_t budget, std::uint64_t seed,
                        unsigned random_trials) {
  std::uint64_t size = ring->enum_size();
  auto domain = checked_pow(size, n, budget / 2);
  auto target = checked_pow(size, m, budget / 2);
  std::uint64_t per_candidate =
      domain && target ? *domain + *target : budget + 1;
  return search_generic(ring, n, m, side, budget, seed, random_trials,
                        per_candidate, [](const ModuleMap& f) {
                          return brute_surjective(
                                     f, std::numeric_limits<std::uint64_t>::max())
                              .surjective;
                        });
}

// ---------------------------------------------------------------------------
// bounded-degree kernel over Z[y]

namespace {

// Reduced row echelon form over the rationals, in place; returns pivot
// column indices.
std::vector<int> rref(std::vector<std::vector<BigRat>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    BigRat inv = m[r][c];
    for (auto& x : m[r]) x /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      BigRat factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Elem>> bounded_degree_kernel(const ModuleMap& f,
                                                     unsigned degree) {
  const RingPtr& ring = f.ring();
  if (!is_poly_ring(ring) || !is_integer_ring(poly_base(ring)))
    throw Error("bounded_degree_kernel expects a map over Poly(Z,y)");

  unsigned src = f.source_dim(), tgt = f.target_dim();
  unsigned entry_deg = 0;
  for (unsigned t = 0; t < tgt; ++t)
    for (unsigned s = 0; s < src; ++s)
      entry_deg = std::max(entry_deg, poly_degree(f.action_entry(t, s)));
  unsigned out_deg = entry_deg + degree;

  // unknown u_{s,d}: coefficient of y^d in source coordinate s
  std::size_t ncols = std::size_t(src) * (degree + 1);
  std::size_t nrows = std::size_t(tgt) * (out_deg + 1);
  std::vector<std::vector<BigRat>> sys(nrows,
                                       std::vector<BigRat>(ncols, BigRat(0)));
  for (unsigned t = 0; t < tgt; ++t)
    for (unsigned s = 0; s < src; ++s) {
      const Elem& c = f.action_entry(t, s);
      for (unsigned d = 0; d <= degree; ++d)
        for (unsigned e = d; e <= out_deg; ++e) {
          if (e - d > poly_degree(c)) continue;
          BigInt coef = int_value(poly_coeff_at(c, e - d));
          if (coef == 0) continue;
          sys[std::size_t(t) * (out_deg + 1) + e]
             [std::size_t(s) * (degree + 1) + d] += BigRat(coef);
        }
    }

  std::vector<int> pivots = rref(sys);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<std::vector<Elem>> basis;
  RingPtr zring = integer_ring();
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<BigRat> x(ncols, BigRat(0));
    x[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[static_cast<std::size_t>(pivots[r])] = -sys[r][free_col];
    // clear denominators, divide by content, normalize leading sign
    BigInt lcm_den = 1;
    for (const auto& q : x)
      lcm_den = boost::multiprecision::lcm(lcm_den,
                                           boost::multiprecision::denominator(q));
    std::vector<BigInt> xi;
    xi.reserve(ncols);
    BigInt content = 0;
    for (const auto& q : x) {
      BigInt v = boost::multiprecision::numerator(q) *
                 (lcm_den / boost::multiprecision::denominator(q));
      content = boost::multiprecision::gcd(content, v);
      xi.push_back(std::move(v));
    }
    if (content == 0) continue;
    for (auto& v : xi) v /= content;
    for (const auto& v : xi) {
      if (v == 0) continue;
      if (v < 0)
        for (auto& w : xi) w = -w;
      break;
    }
    std::vector<Elem> vec;
    vec.reserve(src);
    for (unsigned s = 0; s < src; ++s) {
      std::vector<Elem> coeffs;
      for (unsigned d = 0; d <= degree; ++d)
        coeffs.push_back(
            zring->from_int(xi[std::size_t(s) * (degree + 1) + d]));
      vec.push_back(poly_from_coeffs(ring, std::move(coeffs)));
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// kernel transport over an Ore extension

Report prop112_witness(const ModuleMap& f, const Elem& a, unsigned k,
                       const std::vector<Elem>& b, std::uint64_t seed,
                       unsigned count) {
  if (!is_ore_extension_ring(f.ring()))
    throw Error("prop112_witness expects a map over an Ore extension");
  if (f.side() != Side::Right)
    throw Error("prop112_witness is a right-module device");
  OreRingPtr ore = ore_ring_of(f.ring());
  const RingPtr& base = ore->base();
  if (a.ring_ptr().get() != base.get())
    throw RingMismatchError(base->name(), a.ring().name());
  if (!eq_at(ore->sigma()(a), base->zero(), 16))
    throw Error("prop112_witness: a is not in ker(sigma)");
  for (unsigned t = 0; t < f.target_dim(); ++t)
    for (unsigned s = 0; s < f.source_dim(); ++s)
      if (ore_elem_poly(f.action_entry(t, s)).degree() > k)
        throw Error("prop112_witness: an entry exceeds filtration level " +
                    std::to_string(k));
  if (b.size() != f.source_dim())
    throw Error("prop112_witness: b has the wrong dimension");
  for (const auto& e : b)
    if (e.ring_ptr().get() != base.get())
      throw RingMismatchError(base->name(), e.ring().name());

  Report report("prop112_witness", seed);
  report.set_param("ring", f.ring()->name());
  report.set_param("a", base->show(a));
  report.set_param("k", k);
  report.set_param("count", count);

  bool b_nonzero = false;
  for (const auto& e : b) b_nonzero = b_nonzero || !eq_at(e, base->zero(), 16);
  report.add("b_nonzero", b_nonzero,
             b_nonzero ? "" : "degenerate input: b must be nonzero");

  Elem a_pow = elem_pow(a, k);
  OrePoly a_pow_const = OrePoly::constant(ore, a_pow);

  // psi(r) = f(a^k r); its matrix entries are f_{ts} a^k, and since
  // sigma(a) = 0 every x^i a^k with i <= k collapses into the base ring
  bool lands_in_base = true;
  std::vector<Elem> psi_entries;
  psi_entries.reserve(std::size_t(f.target_dim()) * f.source_dim());
  for (unsigned t = 0; t < f.target_dim(); ++t)
    for (unsigned s = 0; s < f.source_dim(); ++s) {
      OrePoly prod =
          ore_mul(ore_elem_poly(f.action_entry(t, s)), a_pow_const);
      if (!prod.is_zero() && prod.degree() > 0) lands_in_base = false;
      psi_entries.push_back(prod.is_zero() ? base->zero() : prod.coeff_at(0));
    }
  report.add("psi_lands_in_base", lands_in_base);

  ModuleMap psi(base, f.target_dim(), f.source_dim(), psi_entries,
                Side::Right);

  // cross-check the collapsed matrix against the full Ore route on samples
  bool matches = true;
  std::string w_match;
  Rng rng(seed);
  for (unsigned i = 0; i < count && matches; ++i) {
    std::vector<Elem> r;
    for (unsigned s = 0; s < f.source_dim(); ++s) r.push_back(base->sample(rng));
    std::vector<Elem> via_base = apply_map(psi, r);
    std::vector<Elem> lifted;
    for (const auto& e : r)
      lifted.push_back(
          ore_elem(f.ring(), ore_mul(a_pow_const, OrePoly::constant(ore, e))));
    std::vector<Elem> via_ore = apply_map(f, lifted);
    for (unsigned t = 0; t < f.target_dim(); ++t) {
      const OrePoly& p = ore_elem_poly(via_ore[t]);
      bool same = (p.is_zero() || p.degree() == 0) &&
                  eq_at(p.is_zero() ? base->zero() : p.coeff_at(0),
                        via_base[t], 16);
      if (!same) {
        matches = false;
        w_match = "sample index " + std::to_string(i);
      }
    }
  }
  report.add("psi_matches_f_on_samples", matches, w_match);

  std::vector<Elem> psi_b = apply_map(psi, b);
  bool psi_b_zero = true;
  for (const auto& e : psi_b)
    psi_b_zero = psi_b_zero && eq_at(e, base->zero(), 16);
  report.add("psi_b_is_zero", psi_b_zero);

  std::vector<Elem> akb;
  bool akb_nonzero = false;
  for (const auto& e : b) {
    Elem v = a_pow * e;
    akb_nonzero = akb_nonzero || !eq_at(v, base->zero(), 16);
    akb.push_back(std::move(v));
  }
  report.add("a_pow_k_b_nonzero", akb_nonzero,
             akb_nonzero ? "a^k b = " + vector_show(base, akb) : "");

  std::vector<Elem> lifted;
  for (const auto& e : akb)
    lifted.push_back(ore_elem(f.ring(), OrePoly::constant(ore, e)));
  std::vector<Elem> image = apply_map(f, lifted);
  bool killed = true;
  for (const auto& e : image)
    killed = killed && ore_elem_poly(e).is_zero();
  report.add("f_kills_a_pow_k_b", killed);
  return report;
}

}  // namespace orelab
