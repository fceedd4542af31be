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

#include "orelab/lazy_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace orelab {
namespace {

void require_same_base(const LazyMatrix& m, const LazyMatrix& n) {
  if (!m.valid() || !n.valid())
    throw Error("operation on default-constructed lazy matrix");
  if (m.base.get() != n.base.get())
    throw RingMismatchError(m.base->name(), n.base->name());
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

LazyMatrix lazy_zero(RingPtr base) {
  LazyMatrix m;
  m.base = base;
  m.entry = [base](std::size_t, std::size_t) { return base->zero(); };
  m.row_support = [](std::size_t) { return std::vector<std::size_t>{}; };
  m.col_support = [](std::size_t) { return std::vector<std::size_t>{}; };
  m.upper_triangular = true;
  return m;
}

LazyMatrix lazy_identity(RingPtr base) {
  LazyMatrix m;
  m.base = base;
  m.entry = [base](std::size_t i, std::size_t j) {
    return i == j ? base->one() : base->zero();
  };
  m.row_support = [](std::size_t i) { return std::vector<std::size_t>{i}; };
  m.col_support = [](std::size_t j) { return std::vector<std::size_t>{j}; };
  m.upper_triangular = true;
  return m;
}

LazyMatrix lazy_add(const LazyMatrix& m, const LazyMatrix& n) {
  require_same_base(m, n);
  LazyMatrix out;
  out.base = m.base;
  out.entry = [m, n](std::size_t i, std::size_t j) {
    return m.entry(i, j) + n.entry(i, j);
  };
  out.row_support = [m, n](std::size_t i) {
    std::vector<std::size_t> s = m.row_support(i);
    std::vector<std::size_t> t = n.row_support(i);
    s.insert(s.end(), t.begin(), t.end());
    return sorted_unique(std::move(s));
  };
  if (m.has_col_support() && n.has_col_support()) {
    auto mc = m.col_support;
    auto nc = n.col_support;
    out.col_support = [mc, nc](std::size_t j) {
      std::vector<std::size_t> s = mc(j);
      std::vector<std::size_t> t = nc(j);
      s.insert(s.end(), t.begin(), t.end());
      return sorted_unique(std::move(s));
    };
  }
  out.upper_triangular = m.upper_triangular && n.upper_triangular;
  return out;
}

LazyMatrix lazy_mul(const LazyMatrix& m, const LazyMatrix& n) {
  require_same_base(m, n);
  LazyMatrix out;
  out.base = m.base;
  RingPtr base = m.base;
  out.entry = [m, n, base](std::size_t i, std::size_t j) {
    Elem acc = base->zero();
    for (std::size_t k : m.row_support(i))
      acc = acc + m.entry(i, k) * n.entry(k, j);
    return acc;
  };
  out.row_support = [m, n](std::size_t i) {
    std::vector<std::size_t> s;
    for (std::size_t k : m.row_support(i)) {
      std::vector<std::size_t> t = n.row_support(k);
      s.insert(s.end(), t.begin(), t.end());
    }
    return sorted_unique(std::move(s));
  };
  if (m.has_col_support() && n.has_col_support()) {
    auto mc = m.col_support;
    auto nc = n.col_support;
    out.col_support = [mc, nc](std::size_t j) {
      std::vector<std::size_t> s;
      for (std::size_t k : nc(j)) {
        std::vector<std::size_t> t = mc(k);
        s.insert(s.end(), t.begin(), t.end());
      }
      return sorted_unique(std::move(s));
    };
  }
  out.upper_triangular = m.upper_triangular && n.upper_triangular;
  return out;
}

LazyMatrix lazy_transpose(const LazyMatrix& m) {
  if (!m.has_col_support())
    throw Error("transpose needs a column-support oracle");
  LazyMatrix out;
  out.base = m.base;
  out.entry = [m](std::size_t i, std::size_t j) { return m.entry(j, i); };
  out.row_support = m.col_support;
  out.col_support = m.row_support;
  out.upper_triangular = false;  // transpose of upper-triangular is lower
  return out;
}

bool lazy_window_eq(const LazyMatrix& m, const LazyMatrix& n, unsigned w) {
  require_same_base(m, n);
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (!eq_at(m.entry(i, j), n.entry(i, j), w)) return false;
  return true;
}

std::string lazy_show_window(const LazyMatrix& m, unsigned w) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < w; ++i) {
    if (i) out << ", ";
    out << "[";
    for (std::size_t j = 0; j < w; ++j) {
      if (j) out << ", ";
      out << m.base->show(m.entry(i, j));
    }
    out << "]";
  }
  out << "] (window " << w << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// banded matrices

BandedMatrix banded_make(RingPtr base, std::map<std::size_t, Elem> diagonals) {
  BandedMatrix m;
  m.base = base;
  m.seqring = seq_ring(base);
  for (auto& [j, d] : diagonals)
    if (d.ring_ptr().get() != m.seqring.get())
      throw RingMismatchError(m.seqring->name(), d.ring().name());
  m.diagonals = std::move(diagonals);
  return m;
}

BandedMatrix banded_zero(RingPtr base) { return banded_make(base, {}); }

BandedMatrix banded_identity(RingPtr base) {
  RingPtr sr = seq_ring(base);
  return banded_make(base, {{0, sr->one()}});
}

BandedMatrix banded_ones_band(RingPtr base, std::size_t j) {
  RingPtr sr = seq_ring(base);
  return banded_make(base, {{j, sr->one()}});
}

BandedMatrix banded_add(const BandedMatrix& m, const BandedMatrix& n) {
  if (m.base.get() != n.base.get())
    throw RingMismatchError(m.base->name(), n.base->name());
  std::map<std::size_t, Elem> out = m.diagonals;
  for (const auto& [j, d] : n.diagonals) {
    auto it = out.find(j);
    if (it == out.end())
      out.emplace(j, d);
    else
      it->second = it->second + d;
  }
  return banded_make(m.base, std::move(out));
}

Elem banded_entry(const BandedMatrix& m, std::size_t i, std::size_t j) {
  if (j < i) return m.base->zero();
  auto it = m.diagonals.find(j - i);
  if (it == m.diagonals.end()) return m.base->zero();
  return seq_entry(it->second, i);
}

LazyMatrix banded_to_lazy(const BandedMatrix& m) {
  LazyMatrix out;
  out.base = m.base;
  BandedMatrix copy = m;
  out.entry = [copy](std::size_t i, std::size_t j) {
    return banded_entry(copy, i, j);
  };
  std::vector<std::size_t> bands;
  for (const auto& [j, d] : m.diagonals) bands.push_back(j);
  out.row_support = [bands](std::size_t i) {
    std::vector<std::size_t> s;
    for (std::size_t b : bands) s.push_back(i + b);
    return s;
  };
  out.col_support = [bands](std::size_t j) {
    std::vector<std::size_t> s;
    for (std::size_t b : bands)
      if (b <= j) s.push_back(j - b);
    return s;
  };
  out.upper_triangular = true;
  return out;
}

std::size_t banded_max_band(const BandedMatrix& m) {
  return m.diagonals.empty() ? 0 : m.diagonals.rbegin()->first;
}

BandedMatrix sample_banded(const RingPtr& base, Rng& rng,
                           std::size_t max_band) {
  RingPtr sr = seq_ring(base);
  std::map<std::size_t, Elem> diags;
  for (std::size_t b = 0; b <= max_band; ++b)
    if (rng.coin()) diags.emplace(b, sr->sample(rng));
  return banded_make(base, std::move(diags));
}

// ---------------------------------------------------------------------------
// pattern witnesses and recovery

PatternWitnesses lemma13_witnesses(const RingPtr& base, unsigned window) {
  LazyMatrix a;
  a.base = base;
  a.entry = [base](std::size_t i, std::size_t j) {
    return j == 2 * i ? base->one() : base->zero();
  };
  a.row_support = [](std::size_t i) {
    return std::vector<std::size_t>{2 * i};
  };
  a.col_support = [](std::size_t j) {
    return j % 2 == 0 ? std::vector<std::size_t>{j / 2}
                      : std::vector<std::size_t>{};
  };
  a.upper_triangular = true;

  LazyMatrix b;
  b.base = base;
  b.entry = [base](std::size_t i, std::size_t j) {
    return j == 2 * i + 1 ? base->one() : base->zero();
  };
  b.row_support = [](std::size_t i) {
    return std::vector<std::size_t>{2 * i + 1};
  };
  b.col_support = [](std::size_t j) {
    return j % 2 == 1 ? std::vector<std::size_t>{(j - 1) / 2}
                      : std::vector<std::size_t>{};
  };
  b.upper_triangular = true;

  Report report("lemma13_witnesses", 0);
  report.set_param("ring", base->name());
  report.set_param("window", window);
  LazyMatrix at = lazy_transpose(a);
  LazyMatrix bt = lazy_transpose(b);
  LazyMatrix id = lazy_identity(base);
  LazyMatrix zero = lazy_zero(base);
  report.add("AAt_is_identity", lazy_window_eq(lazy_mul(a, at), id, window));
  report.add("BBt_is_identity", lazy_window_eq(lazy_mul(b, bt), id, window));
  report.add("ABt_is_zero", lazy_window_eq(lazy_mul(a, bt), zero, window));
  report.add("BAt_is_zero", lazy_window_eq(lazy_mul(b, at), zero, window));
  return PatternWitnesses{std::move(a), std::move(b), std::move(report)};
}

std::pair<LazyMatrix, LazyMatrix> recover_coefficients(const LazyMatrix& z,
                                                       const LazyMatrix& a,
                                                       const LazyMatrix& b) {
  return {lazy_mul(z, lazy_transpose(a)), lazy_mul(z, lazy_transpose(b))};
}

// ---------------------------------------------------------------------------
// the down-right shift

LazyMatrix umat_shift_apply(const LazyMatrix& m) {
  if (!m.upper_triangular)
    throw Error("the shift endomorphism acts on upper-triangular matrices");
  LazyMatrix out;
  out.base = m.base;
  RingPtr base = m.base;
  out.entry = [m, base](std::size_t i, std::size_t j) {
    if (i == 0 && j == 0) return m.entry(0, 0);
    if (i == 0 || j == 0) return base->zero();
    return m.entry(i - 1, j - 1);
  };
  out.row_support = [m](std::size_t i) {
    if (i == 0) return std::vector<std::size_t>{0};
    std::vector<std::size_t> s;
    for (std::size_t k : m.row_support(i - 1)) s.push_back(k + 1);
    return s;
  };
  if (m.has_col_support()) {
    auto mc = m.col_support;
    out.col_support = [mc](std::size_t j) {
      if (j == 0) return std::vector<std::size_t>{0};
      std::vector<std::size_t> s;
      for (std::size_t k : mc(j - 1)) s.push_back(k + 1);
      return s;
    };
  }
  out.upper_triangular = true;
  return out;
}

Report umat_shift_check(const RingPtr& base, std::uint64_t seed,
                        unsigned count, unsigned window) {
  Report report("umat_shift_endomorphism", seed);
  report.set_param("ring", base->name());
  report.set_param("count", count);
  report.set_param("window", window);

  bool additive = true, multiplicative = true, injective = true;
  std::string w_add, w_mul, w_inj;
  Rng rng(seed);
  for (unsigned t = 0; t < count; ++t) {
    LazyMatrix m = banded_to_lazy(sample_banded(base, rng));
    LazyMatrix n = banded_to_lazy(sample_banded(base, rng));
    if (additive &&
        !lazy_window_eq(umat_shift_apply(lazy_add(m, n)),
                        lazy_add(umat_shift_apply(m), umat_shift_apply(n)),
                        window)) {
      additive = false;
      w_add = "pair index " + std::to_string(t);
    }
    if (multiplicative &&
        !lazy_window_eq(umat_shift_apply(lazy_mul(m, n)),
                        lazy_mul(umat_shift_apply(m), umat_shift_apply(n)),
                        window)) {
      multiplicative = false;
      w_mul = "pair index " + std::to_string(t);
    }
    if (injective && !lazy_window_eq(m, n, window) &&
        lazy_window_eq(umat_shift_apply(m), umat_shift_apply(n), window + 1)) {
      injective = false;
      w_inj = "pair index " + std::to_string(t);
    }
  }
  report.add("additive", additive, w_add);
  report.add("multiplicative", multiplicative, w_mul);
  report.add("fixes_identity",
             lazy_window_eq(umat_shift_apply(lazy_identity(base)),
                            lazy_identity(base), window));
  report.add("injective_on_windows", injective, w_inj);
  return report;
}

// ---------------------------------------------------------------------------
// theta

SkewSeries theta(const BandedMatrix& m, unsigned precision) {
  std::size_t maxband = banded_max_band(m);
  if (!m.diagonals.empty() && maxband >= precision)
    throw Error("theta: band " + std::to_string(maxband) +
                " does not fit below precision " + std::to_string(precision));
  RingPtr sr = m.seqring;
  std::vector<Elem> coeffs(precision, sr->zero());
  for (const auto& [j, d] : m.diagonals) coeffs[j] = d;
  return SkewSeries(sr, seq_shift_endo(sr), precision, std::move(coeffs));
}

BandedMatrix theta_inverse(const SkewSeries& s) {
  const RingPtr& sr = s.base();
  if (!is_seq_ring(sr))
    throw Error("theta_inverse expects a series over a sequence ring");
  if (s.sigma().name() != "shift")
    throw Error("theta_inverse expects the shift twist");
  RingPtr base = seq_base(sr);
  std::map<std::size_t, Elem> diags;
  for (unsigned j = 0; j < s.precision(); ++j) {
    const Elem& c = s.coeffs()[j];
    bool all_zero = true;
    if (base->caps().exact_equality) {
      for (const auto& e : seq_prefix(c))
        all_zero = all_zero && base->eq(e, base->zero());
      for (const auto& e : seq_period(c))
        all_zero = all_zero && base->eq(e, base->zero());
    } else {
      all_zero = false;
    }
    if (!all_zero) diags.emplace(j, c);
  }
  return banded_make(base, std::move(diags));
}

Report theta_check(const RingPtr& base, std::uint64_t seed, unsigned count,
                   unsigned precision, unsigned window, std::size_t max_band) {
  Report report("theta_ring_isomorphism", seed);
  report.set_param("ring", base->name());
  report.set_param("count", count);
  report.set_param("precision", precision);
  report.set_param("window", window);
  report.set_param("max_band", static_cast<std::uint64_t>(max_band));

  bool additive = true, multiplicative = true;
  std::string w_add, w_mul;
  Rng rng(seed);
  for (unsigned t = 0; t < count; ++t) {
    BandedMatrix m = sample_banded(base, rng, max_band);
    BandedMatrix n = sample_banded(base, rng, max_band);
    if (additive &&
        !series_eq(theta(banded_add(m, n), precision),
                   series_add(theta(m, precision), theta(n, precision)),
                   window)) {
      additive = false;
      w_add = "pair index " + std::to_string(t);
    }
    if (multiplicative) {
      // left side read off the exact finite-sum product of the matrices,
      // right side computed in the series ring
      SkewSeries rhs =
          series_mul(theta(m, precision), theta(n, precision));
      LazyMatrix prod = lazy_mul(banded_to_lazy(m), banded_to_lazy(n));
      for (unsigned j = 0; j < precision && multiplicative; ++j)
        for (std::size_t i = 0; i < window && multiplicative; ++i)
          if (!eq_at(prod.entry(i, i + j), seq_entry(rhs.coeffs()[j], i),
                     window)) {
            multiplicative = false;
            w_mul = "pair index " + std::to_string(t) + ", band " +
                    std::to_string(j) + ", row " + std::to_string(i);
          }
    }
  }
  report.add("additive", additive, w_add);
  report.add("multiplicative", multiplicative, w_mul);
  return report;
}

Report umat_direct_finiteness_demo(const RingPtr& base, unsigned precision,
                                   bool base_directly_finite,
                                   unsigned window) {
  Report report("umat_direct_finiteness_demo", 0);
  report.set_param("ring", base->name());
  report.set_param("precision", precision);
  report.set_param("window", window);
  report.set_param("base_directly_finite",
                   base_directly_finite ? "asserted" : "not-asserted");
  if (!base_directly_finite)
    throw Error("demo requires a directly finite base (assert or brute-check "
                "upstream)");

  BandedMatrix pm = banded_add(banded_identity(base), banded_ones_band(base, 1));
  SkewSeries p = theta(pm, precision);
  SkewSeries q = right_inverse(p);
  SkewSeries one = SkewSeries::unit(p.base(), p.sigma(), precision);
  report.add("pq_equals_one_mod_xN", series_eq(series_mul(p, q), one, window),
             "p = theta(I + superdiagonal)");
  report.add("qp_equals_one_mod_xN", series_eq(series_mul(q, p), one, window));

  BandedMatrix qm = theta_inverse(q);
  LazyMatrix pl = banded_to_lazy(pm);
  LazyMatrix ql = banded_to_lazy(qm);
  LazyMatrix id = lazy_identity(base);
  unsigned w = std::min(window, precision);
  report.add("matrix_PQ_is_identity_on_window",
             lazy_window_eq(lazy_mul(pl, ql), id, w),
             "window capped at precision: entries beyond band N-1 are not "
             "carried by the truncated series");
  report.add("matrix_QP_is_identity_on_window",
             lazy_window_eq(lazy_mul(ql, pl), id, w));
  return report;
}

// ---------------------------------------------------------------------------
// UM_N(R) as a ring handle

namespace {

class UMatRing final : public Ring {
 public:
  explicit UMatRing(RingPtr base)
      : Ring("UMat(" + base->name() + ")",
             RingCaps{false, false, base->caps().characteristic}),
        base_(std::move(base)) {}

  const RingPtr& base() const { return base_; }

  Elem wrap(LazyMatrix m) const {
    if (!m.upper_triangular)
      throw Error("UMat elements must be upper-triangular");
    if (m.base.get() != base_.get())
      throw RingMismatchError(base_->name(), m.base->name());
    return make(std::make_shared<LazyMatrix>(std::move(m)));
  }

  const LazyMatrix& matrix(const Elem& a) const {
    require_mine(a);
    return a.payload<LazyMatrix>();
  }

  Elem zero() const override { return wrap(lazy_zero(base_)); }
  Elem one() const override { return wrap(lazy_identity(base_)); }
  Elem add(const Elem& a, const Elem& b) const override {
    return wrap(lazy_add(matrix(a), matrix(b)));
  }
  Elem neg(const Elem& a) const override {
    LazyMatrix m = matrix(a);
    RingPtr base = base_;
    LazyMatrix out = m;
    out.entry = [m, base](std::size_t i, std::size_t j) {
      return -m.entry(i, j);
    };
    return wrap(std::move(out));
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    return wrap(lazy_mul(matrix(a), matrix(b)));
  }
  bool eq_window(const Elem& a, const Elem& b, unsigned w) const override {
    return lazy_window_eq(matrix(a), matrix(b), w);
  }
  Elem sample(Rng& rng) const override {
    return wrap(banded_to_lazy(sample_banded(base_, rng)));
  }
  std::string show(const Elem& a) const override {
    return lazy_show_window(matrix(a), 4);
  }
  nlohmann::json to_json(const Elem& a) const override {
    const unsigned w = 6;
    const LazyMatrix& m = matrix(a);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < w; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < w; ++j)
        row.push_back(base_->to_json(m.entry(i, j)));
      rows.push_back(std::move(row));
    }
    return nlohmann::json{{"window", w}, {"corner", rows}};
  }

 private:
  RingPtr base_;
};

const UMatRing& as_umat(const RingPtr& ring) {
  const auto* p = dynamic_cast<const UMatRing*>(ring.get());
  if (!p) throw Error("expected a UMat ring, got '" + ring->name() + "'");
  return *p;
}

}  // namespace

RingPtr umat_ring(RingPtr base) {
  std::string name = "UMat(" + base->name() + ")";
  return intern_ring(name,
                     [&base] { return std::make_shared<UMatRing>(base); });
}

bool is_umat_ring(const RingPtr& ring) {
  return dynamic_cast<const UMatRing*>(ring.get()) != nullptr;
}

RingPtr umat_base(const RingPtr& ring) { return as_umat(ring).base(); }

const LazyMatrix& umat_matrix(const Elem& e) {
  return as_umat(e.ring_ptr()).matrix(e);
}

Elem umat_elem(const RingPtr& ring, LazyMatrix m) {
  return as_umat(ring).wrap(std::move(m));
}

Elem umat_from_banded(const RingPtr& ring, const BandedMatrix& m) {
  return as_umat(ring).wrap(banded_to_lazy(m));
}

EndoMap umat_shift_endo(const RingPtr& ring) {
  as_umat(ring);
  RingPtr handle = ring;
  auto rule = [handle](const Elem& a) {
    return umat_elem(handle, umat_shift_apply(umat_matrix(a)));
  };
  EndoMap sigma(ring, "umat_shift", rule);
  sigma.injective_claimed = true;
  sigma.surjective_claimed = false;
  return sigma;
}

}  // namespace orelab
