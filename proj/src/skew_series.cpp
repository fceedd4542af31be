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

#include "orelab/skew_series.hpp"

#include <sstream>

#include "orelab/rings_basic.hpp"

namespace orelab {
namespace {

void require_compatible(const SkewSeries& p, const SkewSeries& q) {
  if (!p.valid() || !q.valid())
    throw Error("operation on default-constructed series");
  if (p.base().get() != q.base().get())
    throw RingMismatchError(p.base()->name(), q.base()->name());
  if (p.precision() != q.precision())
    throw PrecisionMismatchError(
        "series precision mismatch: " + std::to_string(p.precision()) +
        " vs " + std::to_string(q.precision()));
  if (!p.sigma().same_as(q.sigma()))
    throw PrecisionMismatchError("series twist mismatch: " + p.sigma().name() +
                                 " vs " + q.sigma().name());
}

std::string coeff_str(const std::string& s) {
  if (s.find_first_of(" +*^(") == std::string::npos) return s;
  return "(" + s + ")";
}

}  // namespace

SkewSeries::SkewSeries(RingPtr base, EndoMap sigma, unsigned precision,
                       std::vector<Elem> coeffs)
    : base_(std::move(base)),
      sigma_(std::move(sigma)),
      precision_(precision),
      coeffs_(std::move(coeffs)) {
  if (precision_ < 1) throw Error("series precision must be >= 1");
  if (sigma_.domain().get() != base_.get())
    throw Error("series twist must be an endomorphism of the base ring");
  if (coeffs_.size() > precision_)
    throw PrecisionMismatchError("more coefficients than the precision holds");
  coeffs_.resize(precision_, base_->zero());
}

SkewSeries SkewSeries::zeros(RingPtr base, EndoMap sigma, unsigned precision) {
  return SkewSeries(std::move(base), std::move(sigma), precision, {});
}

SkewSeries SkewSeries::unit(RingPtr base, EndoMap sigma, unsigned precision) {
  Elem one = base->one();
  return SkewSeries(std::move(base), std::move(sigma), precision, {one});
}

SkewSeries SkewSeries::constant(RingPtr base, EndoMap sigma,
                                unsigned precision, const Elem& r) {
  return SkewSeries(std::move(base), std::move(sigma), precision, {r});
}

SkewSeries SkewSeries::variable(RingPtr base, EndoMap sigma,
                                unsigned precision) {
  Elem zero = base->zero();
  Elem one = base->one();
  return SkewSeries(std::move(base), std::move(sigma), precision,
                    {zero, one});
}

SkewSeries series_add(const SkewSeries& p, const SkewSeries& q) {
  require_compatible(p, q);
  std::vector<Elem> out(p.precision());
  for (unsigned i = 0; i < p.precision(); ++i)
    out[i] = p.coeffs()[i] + q.coeffs()[i];
  return SkewSeries(p.base(), p.sigma(), p.precision(), std::move(out));
}

SkewSeries series_neg(const SkewSeries& p) {
  std::vector<Elem> out = p.coeffs();
  for (auto& c : out) c = -c;
  return SkewSeries(p.base(), p.sigma(), p.precision(), std::move(out));
}

SkewSeries series_sub(const SkewSeries& p, const SkewSeries& q) {
  return series_add(p, series_neg(q));
}

SkewSeries series_mul(const SkewSeries& p, const SkewSeries& q) {
  require_compatible(p, q);
  const unsigned n = p.precision();
  const RingPtr& base = p.base();
  const EndoMap& sigma = p.sigma();
  std::vector<Elem> out(n, base->zero());
  // twisted[j] holds sigma^i(q_j) for the current i
  std::vector<Elem> twisted = q.coeffs();
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; i + j < n; ++j)
      out[i + j] = out[i + j] + p.coeffs()[i] * twisted[j];
    if (i + 1 < n)
      for (auto& t : twisted) t = sigma(t);
  }
  return SkewSeries(base, sigma, n, std::move(out));
}

bool series_eq(const SkewSeries& p, const SkewSeries& q, unsigned window) {
  require_compatible(p, q);
  for (unsigned i = 0; i < p.precision(); ++i)
    if (!eq_at(p.coeffs()[i], q.coeffs()[i], window)) return false;
  return true;
}

std::string series_show(const SkewSeries& p) {
  const RingPtr& base = p.base();
  std::ostringstream out;
  bool first = true;
  for (unsigned i = 0; i < p.precision(); ++i) {
    const Elem& c = p.coeffs()[i];
    if (base->caps().exact_equality && base->eq(c, base->zero())) continue;
    if (!first) out << " + ";
    first = false;
    std::string s = coeff_str(base->show(c));
    if (i == 0) {
      out << s;
    } else {
      if (s != "1") out << s << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  out << " + O(x^" << p.precision() << ")";
  return out.str();
}

nlohmann::json series_to_json(const SkewSeries& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(p.base()->to_json(c));
  return nlohmann::json{{"coeffs", coeffs}, {"prec", p.precision()}};
}

SkewSeries sample_series(const RingPtr& base, const EndoMap& sigma,
                         unsigned precision, Rng& rng, bool unit_constant) {
  std::vector<Elem> out;
  out.reserve(precision);
  for (unsigned i = 0; i < precision; ++i) out.push_back(base->sample(rng));
  if (unit_constant) out[0] = base->one();
  return SkewSeries(base, sigma, precision, std::move(out));
}

IdempotentSolveResult idempotent_constant_one_solve(const RingPtr& base,
                                                    const EndoMap& sigma,
                                                    unsigned precision,
                                                    unsigned window) {
  Report report("idempotent_constant_one_solve", 0);
  report.set_param("ring", base->name());
  report.set_param("sigma", sigma.name());
  report.set_param("precision", precision);
  report.set_param("window", window);

  std::vector<Elem> e(precision, base->zero());
  e[0] = base->one();
  for (unsigned k = 1; k < precision; ++k) {
    // coefficient k of e^2 is e_k + cross + e_k sigma^k(1) = 2 e_k + cross,
    // so e^2 = e forces e_k = -cross, with cross known from earlier steps
    Elem cross = base->zero();
    for (unsigned i = 1; i < k; ++i) {
      Elem t = e[k - i];
      for (unsigned s = 0; s < i; ++s) t = sigma(t);
      cross = cross + e[i] * t;
    }
    e[k] = -cross;
    report.add("coefficient_" + std::to_string(k) + "_forced", true,
               "e_" + std::to_string(k) + " = -(cross terms) = " +
                   base->show(e[k]));
  }
  SkewSeries solution(base, sigma, precision, std::move(e));
  bool idem = series_eq(series_mul(solution, solution), solution, window);
  report.add("solution_idempotent", idem);
  bool is_one =
      series_eq(solution, SkewSeries::unit(base, sigma, precision), window);
  report.add("solution_is_unit", is_one);
  return IdempotentSolveResult{std::move(solution), std::move(report)};
}

std::vector<SkewSeries> enumerate_idempotents_constant_one(
    const RingPtr& base, const EndoMap& sigma, unsigned precision,
    std::uint64_t budget, unsigned window) {
  std::uint64_t size = base->enum_size();
  std::uint64_t candidates = 1;
  for (unsigned i = 1; i < precision; ++i) {
    if (candidates > budget / size)
      throw BudgetExceededError(0, budget);
    candidates *= size;
  }
  std::vector<SkewSeries> found;
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    std::vector<Elem> coeffs;
    coeffs.push_back(base->one());
    std::uint64_t rest = idx;
    for (unsigned i = 1; i < precision; ++i) {
      coeffs.push_back(base->enum_at(rest % size));
      rest /= size;
    }
    SkewSeries e(base, sigma, precision, std::move(coeffs));
    if (series_eq(series_mul(e, e), e, window)) found.push_back(std::move(e));
  }
  return found;
}

SkewSeries right_inverse(const SkewSeries& p) {
  const RingPtr& base = p.base();
  const EndoMap& sigma = p.sigma();
  const unsigned n = p.precision();
  if (!eq_at(p.coeffs()[0], base->one(), 16))
    throw Error("right_inverse requires a unit constant term");
  std::vector<Elem> q(n, base->zero());
  q[0] = base->one();
  for (unsigned k = 1; k < n; ++k) {
    Elem acc = base->zero();
    for (unsigned i = 1; i <= k; ++i) {
      Elem t = q[k - i];
      for (unsigned s = 0; s < i; ++s) t = sigma(t);
      acc = acc + p.coeffs()[i] * t;
    }
    q[k] = -acc;
  }
  return SkewSeries(base, sigma, n, std::move(q));
}

Report direct_finiteness_instance(const SkewSeries& p, const SkewSeries& q,
                                  bool base_directly_finite, unsigned window) {
  require_compatible(p, q);
  Report report("direct_finiteness_instance", 0);
  report.set_param("ring", p.base()->name());
  report.set_param("sigma", p.sigma().name());
  report.set_param("precision", p.precision());
  report.set_param("window", window);
  report.set_param("modulus", "x^" + std::to_string(p.precision()));

  SkewSeries one = SkewSeries::unit(p.base(), p.sigma(), p.precision());
  if (!series_eq(series_mul(p, q), one, window))
    throw Error("direct_finiteness_instance requires p q = 1 mod x^N");

  SkewSeries e = series_mul(q, p);
  report.add("e_squared_equals_e", series_eq(series_mul(e, e), e, window));
  Elem q0p0 = q.coeffs()[0] * p.coeffs()[0];
  report.add("e_constant_term_is_q0p0", eq_at(e.coeffs()[0], q0p0, window));
  if (base_directly_finite)
    report.add("qp_equals_one_mod_xN", series_eq(e, one, window));
  return report;
}

// ---------------------------------------------------------------------------
// matrices of series

MatrixOfSeries mos_add(const MatrixOfSeries& a, const MatrixOfSeries& b) {
  if (a.n != b.n) throw Error("matrix-of-series dimension mismatch");
  MatrixOfSeries out;
  out.n = a.n;
  out.entries.reserve(a.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    out.entries.push_back(series_add(a.entries[i], b.entries[i]));
  return out;
}

MatrixOfSeries mos_mul(const MatrixOfSeries& a, const MatrixOfSeries& b) {
  if (a.n != b.n) throw Error("matrix-of-series dimension mismatch");
  const unsigned n = a.n;
  MatrixOfSeries out;
  out.n = n;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      SkewSeries acc = series_mul(a.at(i, 0), b.at(0, j));
      for (unsigned k = 1; k < n; ++k)
        acc = series_add(acc, series_mul(a.at(i, k), b.at(k, j)));
      out.entries.push_back(std::move(acc));
    }
  return out;
}

MatrixOfSeries mos_identity(const RingPtr& base, const EndoMap& sigma,
                            unsigned precision, unsigned n) {
  MatrixOfSeries out;
  out.n = n;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      out.entries.push_back(i == j
                                ? SkewSeries::unit(base, sigma, precision)
                                : SkewSeries::zeros(base, sigma, precision));
  return out;
}

MatrixOfSeries sample_mos(const RingPtr& base, const EndoMap& sigma,
                          unsigned precision, unsigned n, Rng& rng) {
  MatrixOfSeries out;
  out.n = n;
  for (unsigned i = 0; i < n * n; ++i)
    out.entries.push_back(sample_series(base, sigma, precision, rng, false));
  return out;
}

bool mos_eq(const MatrixOfSeries& a, const MatrixOfSeries& b,
            unsigned window) {
  if (a.n != b.n) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!series_eq(a.entries[i], b.entries[i], window)) return false;
  return true;
}

SkewSeries matrix_series_iso(const MatrixOfSeries& a) {
  if (a.n == 0 || a.entries.size() != std::size_t(a.n) * a.n)
    throw Error("matrix_series_iso: ragged input");
  const SkewSeries& first = a.entries.front();
  for (const auto& e : a.entries) require_compatible(first, e);
  RingPtr mring = matrix_ring(first.base(), a.n);
  EndoMap lifted = matrix_entrywise(mring, first.sigma());
  unsigned prec = first.precision();
  std::vector<Elem> coeffs;
  coeffs.reserve(prec);
  for (unsigned k = 0; k < prec; ++k) {
    std::vector<Elem> entries;
    entries.reserve(a.entries.size());
    for (const auto& e : a.entries) entries.push_back(e.coeffs()[k]);
    coeffs.push_back(matrix_from_entries(mring, std::move(entries)));
  }
  return SkewSeries(mring, lifted, prec, std::move(coeffs));
}

MatrixOfSeries matrix_series_iso_inv(const SkewSeries& s,
                                     const EndoMap& inner_sigma) {
  const RingPtr& mring = s.base();
  unsigned n = matrix_dim(mring);
  RingPtr base = matrix_base(mring);
  MatrixOfSeries out;
  out.n = n;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      std::vector<Elem> coeffs;
      coeffs.reserve(s.precision());
      for (unsigned k = 0; k < s.precision(); ++k)
        coeffs.push_back(matrix_entry(s.coeffs()[k], i, j));
      out.entries.push_back(
          SkewSeries(base, inner_sigma, s.precision(), std::move(coeffs)));
    }
  return out;
}

Report matrix_series_iso_check(const RingPtr& base, const EndoMap& sigma,
                               unsigned n, unsigned precision,
                               std::uint64_t seed, unsigned count,
                               unsigned window) {
  Report report("matrix_series_iso", seed);
  report.set_param("ring", base->name());
  report.set_param("sigma", sigma.name());
  report.set_param("n", n);
  report.set_param("precision", precision);
  report.set_param("count", count);
  report.set_param("window", window);

  bool additive = true, multiplicative = true;
  std::string w_add, w_mul;
  Rng rng(seed);
  for (unsigned i = 0; i < count; ++i) {
    MatrixOfSeries a = sample_mos(base, sigma, precision, n, rng);
    MatrixOfSeries b = sample_mos(base, sigma, precision, n, rng);
    if (additive &&
        !series_eq(matrix_series_iso(mos_add(a, b)),
                   series_add(matrix_series_iso(a), matrix_series_iso(b)),
                   window)) {
      additive = false;
      w_add = "pair index " + std::to_string(i);
    }
    if (multiplicative &&
        !series_eq(matrix_series_iso(mos_mul(a, b)),
                   series_mul(matrix_series_iso(a), matrix_series_iso(b)),
                   window)) {
      multiplicative = false;
      w_mul = "pair index " + std::to_string(i);
    }
  }
  report.add("additive", additive, w_add);
  report.add("multiplicative", multiplicative, w_mul);
  MatrixOfSeries id = mos_identity(base, sigma, precision, n);
  SkewSeries unit_image = matrix_series_iso(id);
  report.add("maps_identity_to_one",
             series_eq(unit_image,
                       SkewSeries::unit(unit_image.base(), unit_image.sigma(),
                                        precision),
                       window));
  return report;
}

}  // namespace orelab
