#include <cctype>
#include <cstdint>
#include <optional>
#include <string>

#include "orbitdist/subspace.hpp"

namespace orbitdist {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  size_t pos;
  std::string text;   // for Ident
  uint64_t value = 0; // for Int
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }
  const Token& peek2() {
    if (!next_) next_ = lex();
    return *next_;
  }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    if (next_) {
      cur_ = *next_;
      next_.reset();
    } else {
      cur_ = lex();
    }
  }

  Token lex() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const size_t pos = i_;
    if (i_ >= s_.size()) return {Tok::End, pos, "", 0};
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        const uint64_t d = uint64_t(s_[i_] - '0');
        if (v > (UINT64_MAX - d) / 10) throw SyntaxError("integer literal too large", pos);
        v = v * 10 + d;
        ++i_;
      }
      return {Tok::Int, pos, "", v};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      std::string word(s_.substr(i_, j - i_));
      i_ = j;
      return {Tok::Ident, pos, word, 0};
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::Plus, pos, "", 0};
      case '-': return {Tok::Minus, pos, "", 0};
      case '*': return {Tok::Star, pos, "", 0};
      case '^': return {Tok::Caret, pos, "", 0};
      case '(': return {Tok::LParen, pos, "", 0};
      case ')': return {Tok::RParen, pos, "", 0};
      case ',': return {Tok::Comma, pos, "", 0};
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }
  }

  std::string_view s_;
  size_t i_ = 0;
  Token cur_;
  std::optional<Token> next_;
};

class Parser {
 public:
  Parser(std::string_view text, const FieldTower& tower) : lex_(text), T_(tower) {}

  Subspace parse() {
    Subspace acc = parse_term();
    while (lex_.peek().kind == Tok::Plus) {
      lex_.take();
      acc = acc.sum(parse_term());
    }
    expect(Tok::End, "end of input");
    return acc;
  }

  FFElem parse_single_element() {
    FFElem x = parse_elem();
    expect(Tok::End, "end of input");
    return x;
  }

 private:
  void expect(Tok k, const char* what) {
    if (lex_.peek().kind != k)
      throw SyntaxError(std::string("expected ") + what, lex_.peek().pos);
  }

  Token expect_take(Tok k, const char* what) {
    expect(k, what);
    return lex_.take();
  }

  Subspace parse_term() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident && t.text == "span") {
      lex_.take();
      expect_take(Tok::LParen, "'(' after span");
      std::vector<FFElem> elems;
      if (lex_.peek().kind != Tok::RParen) {
        elems.push_back(parse_elem());
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          elems.push_back(parse_elem());
        }
      }
      expect_take(Tok::RParen, "')'");
      return Subspace::span(T_, elems);
    }
    if (t.kind == Tok::Ident && t.text == "F") {
      return parse_line_term(T_.one());
    }
    FFElem e = parse_elem();
    const Token star = expect_take(Tok::Star, "'*' before F(...)");
    if (!(lex_.peek().kind == Tok::Ident && lex_.peek().text == "F"))
      throw SyntaxError("expected F(...) after '*'", lex_.peek().pos);
    (void)star;
    return parse_line_term(e);
  }

  Subspace parse_line_term(const FFElem& gen) {
    expect_take(Tok::Ident, "F");
    expect_take(Tok::LParen, "'(' after F");
    const Token qtok = expect_take(Tok::Int, "field size");
    if (qtok.value != uint64_t(T_.q()))
      throw TowerMismatchError("F(" + std::to_string(qtok.value) +
                               ",...) does not match the tower's q = " + std::to_string(T_.q()));
    int s = 1;
    if (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      const Token stok = expect_take(Tok::Int, "subfield exponent");
      if (stok.value == 0 || stok.value > uint64_t(T_.n()))
        throw InvalidSubfieldError("F_{q^" + std::to_string(stok.value) +
                                   "} is not a subfield of F_{q^n}");
      s = int(stok.value);
    }
    expect_take(Tok::RParen, "')'");
    if (gen.is_zero()) throw ZeroGeneratorError("line generator must be nonzero");
    return line_sum(T_, {{gen, s}}).subspace;
  }

  // elem := mono (("+"|"-") mono)*; ends before '*' when the '*' starts a
  // "* F(...)" tail, so the whole elem becomes the line coefficient
  FFElem parse_elem() {
    FFElem acc = parse_mono();
    for (;;) {
      const Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        acc = T_.add(acc, parse_mono());
      } else if (k == Tok::Minus) {
        lex_.take();
        acc = T_.sub(acc, parse_mono());
      } else {
        break;
      }
    }
    return acc;
  }

  // mono := [int "*"] ("z" ["^" int] | int)
  FFElem parse_mono() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Int) {
      const Token c = lex_.take();
      FFElem coeff = scalar(c.value);
      if (lex_.peek().kind == Tok::Star) {
        const Token& after = lex_.peek2();
        if (after.kind == Tok::Ident && after.text == "F") {
          // the '*' belongs to the enclosing term ("elem * F(...)")
          return coeff;
        }
        lex_.take();
        return T_.mul(coeff, parse_base());
      }
      return coeff;
    }
    if (t.kind == Tok::Ident && t.text == "z") return parse_base();
    throw SyntaxError("expected element (integer or z-power)", t.pos);
  }

  FFElem parse_base() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Int) {
      return scalar(lex_.take().value);
    }
    if (t.kind == Tok::Ident && t.text == "z") {
      lex_.take();
      uint64_t exp = 1;
      if (lex_.peek().kind == Tok::Caret) {
        lex_.take();
        exp = expect_take(Tok::Int, "exponent").value;
      }
      return T_.z_power(exp % T_.group_order());
    }
    throw SyntaxError("expected z-power or integer", t.pos);
  }

  FFElem scalar(uint64_t v) const {
    // integer constants reduce mod p
    const uint8_t d = uint8_t(v % uint64_t(T_.p()));
    std::vector<uint8_t> c = {d};
    return T_.from_coeffs(c);
  }

  Lexer lex_;
  const FieldTower& T_;
};

}  // namespace

Subspace parse_subspace(std::string_view text, const FieldTower& tower) {
  return Parser(text, tower).parse();
}

FFElem parse_element(std::string_view text, const FieldTower& tower) {
  return Parser(text, tower).parse_single_element();
}

}  // namespace orbitdist
