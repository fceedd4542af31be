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

#include "orelab/ring_factory.hpp"

#include <cctype>
#include <vector>

#include "orelab/free_ring.hpp"
#include "orelab/laurent_ring.hpp"
#include "orelab/lazy_matrix.hpp"
#include "orelab/rings_basic.hpp"
#include "orelab/sequence_ring.hpp"

namespace orelab {
namespace {

// Minimal recursive-descent reader over the descriptor string.
class DescriptorParser {
 public:
  explicit DescriptorParser(const std::string& text) : text_(text) {}

  RingPtr parse() {
    RingPtr r = ring();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing characters after ring descriptor", pos_);
    return r;
  }

 private:
  RingPtr ring() {
    skip_ws();
    std::string word = ident();
    if (word == "Z") {
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        return mod_ring(number());
      }
      return integer_ring();
    }
    if (word == "Poly") {
      expect('(');
      RingPtr base = ring();
      expect(',');
      std::string var = ident();
      if (var != "y")
        throw ParseError("polynomial descriptor uses the variable y", pos_);
      expect(')');
      return poly_ring(base);
    }
    if (word == "M") {
      std::uint64_t k = number();
      expect('(');
      RingPtr base = ring();
      expect(')');
      if (k == 0 || k > 16)
        throw Error("matrix dimension must be between 1 and 16");
      return matrix_ring(base, static_cast<unsigned>(k));
    }
    if (word == "P") {
      expect('(');
      RingPtr base = ring();
      expect(')');
      return seq_ring(base);
    }
    if (word == "UMat") {
      expect('(');
      RingPtr base = ring();
      expect(')');
      return umat_ring(base);
    }
    if (word == "Laurent") {
      expect('(');
      RingPtr base = ring();
      expect(',');
      std::string key = ident();
      if (key != "prec") throw ParseError("expected prec=<N>", pos_);
      expect('=');
      std::uint64_t prec = number();
      expect(')');
      if (prec == 0 || prec > 64)
        throw Error("Laurent precision must be between 1 and 64");
      return laurent_ring(base, static_cast<unsigned>(prec));
    }
    if (word == "Free") {
      expect('(');
      std::string alphabet;
      while (true) {
        std::string gen = ident();
        if (gen.size() != 1)
          throw ParseError("free-ring generators are single letters", pos_);
        alphabet += gen;
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
      std::vector<std::string> forbidden;
      skip_ws();
      if (peek() == '|') {
        ++pos_;
        while (true) {
          std::string factor = ident();
          expect('=');
          if (number() != 0)
            throw ParseError("relations must annihilate (word = 0)", pos_);
          forbidden.push_back(factor);
          skip_ws();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect(')');
      return free_ring(alphabet, std::move(forbidden));
    }
    throw ParseError("unknown ring constructor '" + word + "'",
                     pos_ - word.size());
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
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw ParseError("expected an identifier", pos_);
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return std::stoull(text_.substr(start, pos_ - start));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr make_ring(const std::string& descriptor) {
  return DescriptorParser(descriptor).parse();
}

EndoMap builtin_endo(const std::string& name, const RingPtr& ring,
                     std::uint64_t seed) {
  if (name == "id") return identity_endo(ring);
  if (name == "const_term") {
    if (is_poly_ring(ring)) return poly_const_term(ring);
    if (is_free_ring(ring)) return free_const_term_endo(ring);
    throw Error("const_term lives on polynomial or free rings, not " +
                ring->name());
  }
  if (name == "y_negate") {
    if (is_poly_ring(ring)) return poly_y_negate(ring);
    throw Error("y_negate lives on polynomial rings, not " + ring->name());
  }
  if (name == "shift") {
    if (is_seq_ring(ring)) return seq_shift_endo(ring);
    throw Error("shift lives on sequence rings, not " + ring->name());
  }
  if (name == "laurent_square") {
    if (is_laurent_ring(ring)) return laurent_square_endo(ring);
    throw Error("laurent_square lives on Laurent rings, not " + ring->name());
  }
  if (name == "umat_shift") {
    if (is_umat_ring(ring)) return umat_shift_endo(ring);
    throw Error("umat_shift lives on UMat rings, not " + ring->name());
  }
  if (name == "inner") {
    if (is_matrix_ring(ring)) return matrix_inner_automorphism(ring, seed);
    throw Error("inner lives on enumerable matrix rings, not " + ring->name());
  }
  if (name.rfind("entrywise(", 0) == 0 && name.back() == ')') {
    if (!is_matrix_ring(ring))
      throw Error("entrywise lifts live on matrix rings, not " + ring->name());
    std::string inner_name = name.substr(10, name.size() - 11);
    return matrix_entrywise(ring,
                            builtin_endo(inner_name, matrix_base(ring), seed));
  }
  throw Error("unknown endomorphism name '" + name + "'");
}

SigmaDerivation builtin_derivation(const std::string& name,
                                   const RingPtr& ring, const EndoMap* sigma) {
  if (name == "zero")
    return zero_derivation(ring,
                           sigma != nullptr ? *sigma : identity_endo(ring));
  if (name == "d_dy") {
    if (is_poly_ring(ring)) return poly_differentiation(ring);
    throw Error("d_dy lives on polynomial rings, not " + ring->name());
  }
  if (name == "coeff_shift") {
    if (is_poly_ring(ring)) return poly_coeff_shift(ring);
    throw Error("coeff_shift lives on polynomial rings, not " + ring->name());
  }
  throw Error("unknown derivation name '" + name + "'");
}

bool builtin_is_derivation(const std::string& name) {
  return name == "zero" || name == "d_dy" || name == "coeff_shift";
}

}  // namespace orelab
