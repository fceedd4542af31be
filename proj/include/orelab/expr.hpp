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

#ifndef ORELAB_EXPR_HPP
#define ORELAB_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "orelab/bigint.hpp"
#include "orelab/errors.hpp"
#include "orelab/rng.hpp"

namespace orelab {

/// Tail description inside a band literal: an explicit prefix followed by a
/// constant or periodic tail.
struct SeqDesc {
  std::vector<BigInt> prefix;
  bool constant_tail = true;
  std::vector<BigInt> tail;  // one entry for const, >= 1 for period
};

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

/// Expression tree. Grammar (deterministic, left-associative; juxtaposition
/// is never multiplication):
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := int | sym | call '(' expr ')' | '(' expr ')'
///           | '[' expr (',' expr)* ']' '@' nat          (series literal)
///           | 'band' '{' (nat ':' seq,...)? '}'          (band literal)
///   seq    := 'prefix' '[' ints ']' 'then'
///             ('const' int | 'period' '[' ints ']')
struct Ast {
  enum class Kind { Int, Sym, BinOp, Pow, Call, SeriesLit, BandLit };

  Kind kind = Kind::Int;
  BigInt int_value;                     // Int
  std::string name;                     // Sym, Call
  char op = 0;                          // BinOp: + - *
  std::vector<AstPtr> children;         // BinOp: 2, Pow/Call: 1, SeriesLit: n
  std::uint64_t power = 0;              // Pow
  std::uint64_t series_prec = 0;        // SeriesLit
  std::map<std::uint64_t, SeqDesc> bands;  // BandLit
};

/// Parses per the grammar above; throws ParseError with a position on
/// malformed input. Binding of symbols is the evaluator's concern.
AstPtr parse_expression(const std::string& text);

/// Minimal-parenthesis rendering; parse(print(a)) is structurally equal to
/// a.
std::string print_expression(const AstPtr& ast);

bool ast_equal(const AstPtr& a, const AstPtr& b);

/// Random expression over the given symbol names, for round-trip property
/// tests.
AstPtr generate_expression(Rng& rng, const std::vector<std::string>& symbols,
                           unsigned depth);

}  // namespace orelab

#endif  // ORELAB_EXPR_HPP
