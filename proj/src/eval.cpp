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

#include "orelab/eval.hpp"

#include <sstream>

#include "orelab/free_ring.hpp"
#include "orelab/ring_factory.hpp"
#include "orelab/rings_basic.hpp"
#include "orelab/sequence_ring.hpp"

namespace orelab {
namespace {

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Ring:
      return "ring element";
    case Value::Kind::Ore:
      return "Ore polynomial";
    case Value::Kind::Series:
      return "skew series";
    case Value::Kind::Banded:
      return "banded matrix";
    case Value::Kind::Lazy:
      return "lazy matrix";
  }
  return "?";
}

BandedMatrix banded_neg(const BandedMatrix& m) {
  std::map<std::size_t, Elem> out;
  for (const auto& [j, d] : m.diagonals) out.emplace(j, -d);
  return banded_make(m.base, std::move(out));
}

LazyMatrix lazy_neg(const LazyMatrix& m) {
  LazyMatrix out = m;
  LazyMatrix src = m;
  out.entry = [src](std::size_t i, std::size_t j) { return -src.entry(i, j); };
  return out;
}

BandedMatrix banded_scalar(const RingPtr& base, const Elem& c) {
  RingPtr sr = seq_ring(base);
  return banded_make(base, {{0, seq_const(sr, c)}});
}

LazyMatrix lazy_scalar(const RingPtr& base, const Elem& c) {
  LazyMatrix m;
  m.base = base;
  m.entry = [base, c](std::size_t i, std::size_t j) {
    return i == j ? c : base->zero();
  };
  m.row_support = [](std::size_t i) { return std::vector<std::size_t>{i}; };
  m.col_support = [](std::size_t j) { return std::vector<std::size_t>{j}; };
  m.upper_triangular = true;
  return m;
}

}  // namespace

Value Value::of(Elem e) {
  Value v;
  v.kind = Kind::Ring;
  v.elem = std::move(e);
  return v;
}
Value Value::of(OrePoly p) {
  Value v;
  v.kind = Kind::Ore;
  v.poly = std::move(p);
  return v;
}
Value Value::of(SkewSeries s) {
  Value v;
  v.kind = Kind::Series;
  v.series = std::move(s);
  return v;
}
Value Value::of(BandedMatrix b) {
  Value v;
  v.kind = Kind::Banded;
  v.banded = std::move(b);
  return v;
}
Value Value::of(LazyMatrix m) {
  Value v;
  v.kind = Kind::Lazy;
  v.lazy = std::move(m);
  return v;
}

EvalContext make_context(const std::string& ring_spec,
                         const std::string& sigma_name,
                         const std::string& delta_name, unsigned precision,
                         std::uint64_t seed, unsigned law_check_count) {
  EvalContext ctx;
  ctx.ring = make_ring(ring_spec);
  ctx.precision = precision;
  if (!sigma_name.empty()) {
    ctx.sigma = builtin_endo(sigma_name, ctx.ring, seed);
    ctx.delta = delta_name.empty()
                    ? zero_derivation(ctx.ring, *ctx.sigma)
                    : builtin_derivation(delta_name, ctx.ring, &*ctx.sigma);
    ctx.ore = OreRing::make(ctx.ring, *ctx.sigma, *ctx.delta,
                            law_check_count, seed);
  } else if (!delta_name.empty()) {
    throw Error("--delta needs --sigma");
  }
  return ctx;
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const EvalContext& ctx) : ctx_(ctx) {}

  Value eval(const AstPtr& ast) {
    switch (ast->kind) {
      case Ast::Kind::Int:
        return Value::of(ctx_.ring->from_int(ast->int_value));
      case Ast::Kind::Sym:
        return symbol(ast->name);
      case Ast::Kind::BinOp: {
        Value a = eval(ast->children[0]);
        Value b = eval(ast->children[1]);
        return binop(ast->op, std::move(a), std::move(b));
      }
      case Ast::Kind::Pow:
        return power(eval(ast->children[0]), ast->power);
      case Ast::Kind::Call:
        return call(ast->name, eval(ast->children[0]));
      case Ast::Kind::SeriesLit:
        return series_literal(*ast);
      case Ast::Kind::BandLit:
        return band_literal(*ast);
    }
    throw Error("unreachable expression kind");
  }

 private:
  Value symbol(const std::string& name) {
    if (ctx_.ore && name == "x")
      return Value::of(OrePoly::variable(ctx_.ore));
    if (is_poly_ring(ctx_.ring) && name == "y")
      return Value::of(poly_var(ctx_.ring));
    if (is_free_ring(ctx_.ring)) {
      const std::string& alphabet = free_alphabet(ctx_.ring);
      bool word = !name.empty();
      for (char c : name)
        word = word && alphabet.find(c) != std::string::npos;
      if (word) return Value::of(free_word(ctx_.ring, name));
    }
    throw Error("unbound symbol '" + name + "' in ring " + ctx_.ring->name());
  }

  // lift a plain ring element into the other operand's world
  Value promote(Value v, Value::Kind target) {
    if (v.kind == target) return v;
    if (v.kind == Value::Kind::Banded && target == Value::Kind::Lazy)
      return Value::of(banded_to_lazy(v.banded));
    if (v.kind != Value::Kind::Ring)
      throw Error(std::string("cannot combine a ") + kind_name(v.kind) +
                  " with a " + kind_name(target));
    switch (target) {
      case Value::Kind::Ore:
        return Value::of(OrePoly::constant(ctx_.ore, v.elem));
      case Value::Kind::Series:
        throw Error("series promotion handled at the call site");
      case Value::Kind::Banded:
        return Value::of(banded_scalar(v.elem.ring_ptr(), v.elem));
      case Value::Kind::Lazy:
        return Value::of(lazy_scalar(v.elem.ring_ptr(), v.elem));
      default:
        throw Error("bad promotion");
    }
  }

  Value binop(char op, Value a, Value b) {
    // banded * banded leaves the banded class representation; go lazy
    if (a.kind == Value::Kind::Banded && b.kind == Value::Kind::Banded &&
        op == '*') {
      a = promote(std::move(a), Value::Kind::Lazy);
      b = promote(std::move(b), Value::Kind::Lazy);
    }
    if (a.kind != b.kind) {
      if (a.kind == Value::Kind::Series || b.kind == Value::Kind::Series) {
        Value& s = a.kind == Value::Kind::Series ? a : b;
        Value& r = a.kind == Value::Kind::Series ? b : a;
        if (r.kind != Value::Kind::Ring)
          throw Error(std::string("cannot combine a ") + kind_name(a.kind) +
                      " with a " + kind_name(b.kind));
        r = Value::of(SkewSeries::constant(s.series.base(), s.series.sigma(),
                                           s.series.precision(), r.elem));
      } else if (a.kind == Value::Kind::Lazy || b.kind == Value::Kind::Lazy) {
        a = promote(std::move(a), Value::Kind::Lazy);
        b = promote(std::move(b), Value::Kind::Lazy);
      } else if (a.kind == Value::Kind::Banded ||
                 b.kind == Value::Kind::Banded) {
        a = promote(std::move(a), Value::Kind::Banded);
        b = promote(std::move(b), Value::Kind::Banded);
      } else if (a.kind == Value::Kind::Ore || b.kind == Value::Kind::Ore) {
        a = promote(std::move(a), Value::Kind::Ore);
        b = promote(std::move(b), Value::Kind::Ore);
      } else {
        throw Error(std::string("cannot combine a ") + kind_name(a.kind) +
                    " with a " + kind_name(b.kind));
      }
    }
    switch (a.kind) {
      case Value::Kind::Ring:
        if (op == '+') return Value::of(a.elem + b.elem);
        if (op == '-') return Value::of(a.elem - b.elem);
        return Value::of(a.elem * b.elem);
      case Value::Kind::Ore:
        if (op == '+') return Value::of(ore_add(a.poly, b.poly));
        if (op == '-') return Value::of(ore_sub(a.poly, b.poly));
        return Value::of(ore_mul(a.poly, b.poly));
      case Value::Kind::Series:
        if (op == '+') return Value::of(series_add(a.series, b.series));
        if (op == '-') return Value::of(series_sub(a.series, b.series));
        return Value::of(series_mul(a.series, b.series));
      case Value::Kind::Banded:
        if (op == '+') return Value::of(banded_add(a.banded, b.banded));
        if (op == '-')
          return Value::of(banded_add(a.banded, banded_neg(b.banded)));
        throw Error("unreachable banded product");
      case Value::Kind::Lazy:
        if (op == '+') return Value::of(lazy_add(a.lazy, b.lazy));
        if (op == '-')
          return Value::of(lazy_add(a.lazy, lazy_neg(b.lazy)));
        return Value::of(lazy_mul(a.lazy, b.lazy));
    }
    throw Error("unreachable binop");
  }

  Value power(Value v, std::uint64_t n) {
    switch (v.kind) {
      case Value::Kind::Ring:
        return Value::of(elem_pow(v.elem, n));
      case Value::Kind::Ore:
        return Value::of(ore_pow(v.poly, static_cast<unsigned>(n)));
      case Value::Kind::Series: {
        SkewSeries acc = SkewSeries::unit(v.series.base(), v.series.sigma(),
                                          v.series.precision());
        for (std::uint64_t i = 0; i < n; ++i) acc = series_mul(acc, v.series);
        return Value::of(std::move(acc));
      }
      case Value::Kind::Banded: {
        if (n == 0) return Value::of(banded_identity(v.banded.base));
        LazyMatrix acc = banded_to_lazy(v.banded);
        LazyMatrix base = acc;
        for (std::uint64_t i = 1; i < n; ++i) acc = lazy_mul(acc, base);
        return Value::of(std::move(acc));
      }
      case Value::Kind::Lazy: {
        LazyMatrix acc = lazy_identity(v.lazy.base);
        for (std::uint64_t i = 0; i < n; ++i) acc = lazy_mul(acc, v.lazy);
        return Value::of(std::move(acc));
      }
    }
    throw Error("unreachable power");
  }

  Value call(const std::string& name, Value arg) {
    if (name == "sigma" || name == "delta") {
      if (!ctx_.sigma)
        throw Error("no sigma/delta bound; pass --sigma (and --delta)");
      Elem a = as_base_elem(arg);
      Elem out = name == "sigma" ? (*ctx_.sigma)(a) : (*ctx_.delta)(a);
      return Value::of(std::move(out));
    }
    if (name == "theta") {
      if (arg.kind != Value::Kind::Banded)
        throw Error("theta expects a band literal");
      return Value::of(theta(arg.banded, ctx_.precision));
    }
    if (name == "transpose") {
      if (arg.kind == Value::Kind::Banded)
        return Value::of(lazy_transpose(banded_to_lazy(arg.banded)));
      if (arg.kind == Value::Kind::Lazy)
        return Value::of(lazy_transpose(arg.lazy));
      throw Error("transpose expects a matrix value");
    }
    throw Error("unknown function '" + name + "'");
  }

  Elem as_base_elem(const Value& v) {
    if (v.kind == Value::Kind::Ring) return v.elem;
    if (v.kind == Value::Kind::Ore) {
      if (!v.poly.is_zero() && v.poly.degree() > 0)
        throw Error("sigma/delta apply to coefficient-ring elements");
      return v.poly.is_zero() ? ctx_.ring->zero() : v.poly.coeff_at(0);
    }
    throw Error("sigma/delta apply to coefficient-ring elements");
  }

  Value series_literal(const Ast& ast) {
    EndoMap sigma =
        ctx_.sigma ? *ctx_.sigma : identity_endo(ctx_.ring);
    if (ast.children.size() > ast.series_prec)
      throw Error("series literal has more coefficients than its precision");
    std::vector<Elem> coeffs;
    for (const auto& c : ast.children) {
      Value v = eval(c);
      if (v.kind != Value::Kind::Ring)
        throw Error("series coefficients must be base-ring values");
      coeffs.push_back(v.elem);
    }
    return Value::of(SkewSeries(ctx_.ring, std::move(sigma),
                                static_cast<unsigned>(ast.series_prec),
                                std::move(coeffs)));
  }

  Value band_literal(const Ast& ast) {
    RingPtr base =
        is_umat_ring(ctx_.ring) ? umat_base(ctx_.ring) : ctx_.ring;
    RingPtr sr = seq_ring(base);
    std::map<std::size_t, Elem> diags;
    for (const auto& [j, d] : ast.bands) {
      std::vector<Elem> prefix, tail;
      for (const auto& n : d.prefix) prefix.push_back(base->from_int(n));
      for (const auto& n : d.tail) tail.push_back(base->from_int(n));
      diags.emplace(static_cast<std::size_t>(j),
                    seq_make(sr, std::move(prefix), std::move(tail)));
    }
    return Value::of(banded_make(base, std::move(diags)));
  }

  const EvalContext& ctx_;
};

}  // namespace

Value eval_expression(const AstPtr& ast, const EvalContext& ctx) {
  return Evaluator(ctx).eval(ast);
}

std::string value_show(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Ring:
      return v.elem.ring().show(v.elem);
    case Value::Kind::Ore:
      return ore_show(v.poly);
    case Value::Kind::Series:
      return series_show(v.series);
    case Value::Kind::Banded: {
      std::ostringstream out;
      out << "band{";
      bool first = true;
      for (const auto& [j, d] : v.banded.diagonals) {
        if (!first) out << ", ";
        first = false;
        out << j << ": " << d.ring().show(d);
      }
      out << "}";
      return out.str();
    }
    case Value::Kind::Lazy:
      return lazy_show_window(v.lazy, 6);
  }
  return "?";
}

nlohmann::json value_to_json(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Ring:
      return v.elem.ring().to_json(v.elem);
    case Value::Kind::Ore:
      return ore_to_json(v.poly);
    case Value::Kind::Series:
      return series_to_json(v.series);
    case Value::Kind::Banded: {
      nlohmann::json bands = nlohmann::json::object();
      for (const auto& [j, d] : v.banded.diagonals)
        bands[std::to_string(j)] = d.ring().to_json(d);
      return nlohmann::json{{"bands", bands}};
    }
    case Value::Kind::Lazy: {
      const unsigned w = 6;
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < w; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < w; ++j)
          row.push_back(v.lazy.base->to_json(v.lazy.entry(i, j)));
        rows.push_back(std::move(row));
      }
      return nlohmann::json{{"window", w}, {"corner", rows}};
    }
  }
  return nullptr;
}

}  // namespace orelab
