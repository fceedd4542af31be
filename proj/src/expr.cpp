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

#include "orelab/expr.hpp"

#include <cctype>
#include <sstream>

namespace orelab {
namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  AstPtr parse() {
    AstPtr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  AstPtr expr() {
    AstPtr left = term();
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      AstPtr right = term();
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::BinOp;
      node->op = c;
      node->children = {left, right};
      left = node;
    }
    return left;
  }

  AstPtr term() {
    AstPtr left = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      AstPtr right = factor();
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::BinOp;
      node->op = '*';
      node->children = {left, right};
      left = node;
    }
    return left;
  }

  AstPtr factor() {
    AstPtr base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::Pow;
      node->children = {base};
      node->power = number();
      return node;
    }
    return base;
  }

  AstPtr atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      AstPtr inner = expr();
      expect(')');
      return inner;
    }
    if (c == '[') return series_literal();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::Int;
      node->int_value = BigInt(digits());
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      skip_ws();
      if (name == "band" && peek() == '{') return band_literal();
      if (peek() == '(') {
        ++pos_;
        AstPtr arg = expr();
        expect(')');
        auto node = std::make_shared<Ast>();
        node->kind = Ast::Kind::Call;
        node->name = name;
        node->children = {arg};
        return node;
      }
      auto node = std::make_shared<Ast>();
      node->kind = Ast::Kind::Sym;
      node->name = name;
      return node;
    }
    throw ParseError("expected an atom", pos_);
  }

  AstPtr series_literal() {
    expect('[');
    auto node = std::make_shared<Ast>();
    node->kind = Ast::Kind::SeriesLit;
    node->children.push_back(expr());
    while (true) {
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        node->children.push_back(expr());
        continue;
      }
      break;
    }
    expect(']');
    expect('@');
    node->series_prec = number();
    if (node->series_prec == 0)
      throw ParseError("series precision must be >= 1", pos_);
    return node;
  }

  AstPtr band_literal() {
    expect('{');
    auto node = std::make_shared<Ast>();
    node->kind = Ast::Kind::BandLit;
    skip_ws();
    if (peek() != '}') {
      while (true) {
        std::uint64_t band = number();
        expect(':');
        node->bands[band] = seq_desc();
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('}');
    return node;
  }

  SeqDesc seq_desc() {
    keyword("prefix");
    SeqDesc d;
    d.prefix = int_list();
    keyword("then");
    skip_ws();
    std::string which = ident();
    if (which == "const") {
      d.constant_tail = true;
      d.tail = {signed_int()};
    } else if (which == "period") {
      d.constant_tail = false;
      d.tail = int_list();
      if (d.tail.empty())
        throw ParseError("period needs at least one entry", pos_);
    } else {
      throw ParseError("expected 'const' or 'period'", pos_);
    }
    return d;
  }

  std::vector<BigInt> int_list() {
    expect('[');
    std::vector<BigInt> out;
    skip_ws();
    if (peek() != ']') {
      out.push_back(signed_int());
      while (true) {
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          out.push_back(signed_int());
          continue;
        }
        break;
      }
    }
    expect(']');
    return out;
  }

  BigInt signed_int() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    BigInt v(digits());
    return negative ? BigInt(-v) : v;
  }

  void keyword(const std::string& word) {
    skip_ws();
    std::string got = ident();
    if (got != word)
      throw ParseError("expected '" + word + "', got '" + got + "'",
                       pos_ - got.size());
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (start == pos_ ||
        std::isdigit(static_cast<unsigned char>(text_[start])))
      throw ParseError("expected an identifier", pos_);
    return text_.substr(start, pos_ - start);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number() { return std::stoull(digits()); }

  const std::string& text_;
  std::size_t pos_ = 0;
};

int precedence(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::BinOp:
      return a.op == '*' ? 2 : 1;
    case Ast::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

void print_rec(const AstPtr& ast, int parent_prec, std::ostringstream& out) {
  int prec = precedence(*ast);
  bool parens = prec < parent_prec;
  if (parens) out << "(";
  switch (ast->kind) {
    case Ast::Kind::Int:
      out << ast->int_value.str();
      break;
    case Ast::Kind::Sym:
      out << ast->name;
      break;
    case Ast::Kind::BinOp:
      print_rec(ast->children[0], prec, out);
      out << ' ' << ast->op << ' ';
      print_rec(ast->children[1], prec + 1, out);
      break;
    case Ast::Kind::Pow:
      print_rec(ast->children[0], 4, out);
      out << '^' << ast->power;
      break;
    case Ast::Kind::Call:
      out << ast->name << '(';
      print_rec(ast->children[0], 0, out);
      out << ')';
      break;
    case Ast::Kind::SeriesLit: {
      out << '[';
      for (std::size_t i = 0; i < ast->children.size(); ++i) {
        if (i) out << ", ";
        print_rec(ast->children[i], 0, out);
      }
      out << "] @ " << ast->series_prec;
      break;
    }
    case Ast::Kind::BandLit: {
      out << "band{";
      bool first = true;
      for (const auto& [j, d] : ast->bands) {
        if (!first) out << ", ";
        first = false;
        out << j << ": prefix [";
        for (std::size_t i = 0; i < d.prefix.size(); ++i) {
          if (i) out << ", ";
          out << d.prefix[i].str();
        }
        out << "] then ";
        if (d.constant_tail) {
          out << "const " << d.tail[0].str();
        } else {
          out << "period [";
          for (std::size_t i = 0; i < d.tail.size(); ++i) {
            if (i) out << ", ";
            out << d.tail[i].str();
          }
          out << "]";
        }
      }
      out << "}";
      break;
    }
  }
  if (parens) out << ")";
}

}  // namespace

AstPtr parse_expression(const std::string& text) {
  return ExprParser(text).parse();
}

std::string print_expression(const AstPtr& ast) {
  std::ostringstream out;
  print_rec(ast, 0, out);
  return out.str();
}

bool ast_equal(const AstPtr& a, const AstPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Ast::Kind::Int:
      return a->int_value == b->int_value;
    case Ast::Kind::Sym:
      return a->name == b->name;
    case Ast::Kind::BinOp:
      if (a->op != b->op) return false;
      break;
    case Ast::Kind::Pow:
      if (a->power != b->power) return false;
      break;
    case Ast::Kind::Call:
      if (a->name != b->name) return false;
      break;
    case Ast::Kind::SeriesLit:
      if (a->series_prec != b->series_prec) return false;
      break;
    case Ast::Kind::BandLit: {
      if (a->bands.size() != b->bands.size()) return false;
      auto ia = a->bands.begin();
      auto ib = b->bands.begin();
      for (; ia != a->bands.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        const SeqDesc& x = ia->second;
        const SeqDesc& y = ib->second;
        if (x.prefix != y.prefix || x.constant_tail != y.constant_tail ||
            x.tail != y.tail)
          return false;
      }
      break;
    }
  }
  if (a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!ast_equal(a->children[i], b->children[i])) return false;
  return true;
}

AstPtr generate_expression(Rng& rng, const std::vector<std::string>& symbols,
                           unsigned depth) {
  auto node = std::make_shared<Ast>();
  std::uint64_t pick = depth == 0 ? rng.below(2) : rng.below(10);
  if (pick < 2) {
    if (pick == 0 || symbols.empty()) {
      node->kind = Ast::Kind::Int;
      node->int_value = BigInt(rng.below(100));
    } else {
      node->kind = Ast::Kind::Sym;
      node->name = symbols[rng.below(symbols.size())];
    }
    return node;
  }
  if (pick < 7) {
    node->kind = Ast::Kind::BinOp;
    node->op = "+-*"[rng.below(3)];
    node->children = {generate_expression(rng, symbols, depth - 1),
                      generate_expression(rng, symbols, depth - 1)};
    return node;
  }
  if (pick < 8) {
    node->kind = Ast::Kind::Pow;
    node->children = {generate_expression(rng, symbols, depth - 1)};
    node->power = rng.below(6);
    return node;
  }
  if (pick < 9) {
    node->kind = Ast::Kind::Call;
    node->name = rng.coin() ? "sigma" : "delta";
    node->children = {generate_expression(rng, symbols, depth - 1)};
    return node;
  }
  if (rng.coin()) {
    node->kind = Ast::Kind::SeriesLit;
    std::size_t n = 1 + rng.below(4);
    for (std::size_t i = 0; i < n; ++i)
      node->children.push_back(generate_expression(rng, symbols, depth - 1));
    node->series_prec = n + rng.below(4);
    return node;
  }
  node->kind = Ast::Kind::BandLit;
  std::size_t n = rng.below(3);
  for (std::size_t i = 0; i < n; ++i) {
    SeqDesc d;
    std::size_t np = rng.below(3);
    for (std::size_t p = 0; p < np; ++p)
      d.prefix.push_back(BigInt(rng.int_in(-4, 4)));
    d.constant_tail = rng.coin();
    std::size_t nt = d.constant_tail ? 1 : 1 + rng.below(3);
    for (std::size_t t = 0; t < nt; ++t)
      d.tail.push_back(BigInt(rng.int_in(-4, 4)));
    node->bands[rng.below(5)] = std::move(d);
  }
  return node;
}

}  // namespace orelab
