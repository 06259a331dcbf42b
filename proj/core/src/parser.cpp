// Recursive-descent parser for #-superpolynomials.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | postfix
//   postfix := primary ('^#')*
//   primary := rational | variable | '(' expr ')'
//
// rational is p or p/q; variable is y0_<i>, z0_<i>, y1_<i> or z1_<i>.

#include "superpi/errors.hpp"
#include "superpi/freealg.hpp"

#include <cctype>

namespace superpi {
namespace {

enum class Tok { Number, Var, Plus, Minus, Star, LParen, RParen, Sharp, End };

struct Token {
  Tok kind;
  std::size_t pos;
  Rational number;
  Variable var;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, start, {}, {}};
    const char c = text_[pos_];
    switch (c) {
    case '+': ++pos_; return {Tok::Plus, start, {}, {}};
    case '-': ++pos_; return {Tok::Minus, start, {}, {}};
    case '*': ++pos_; return {Tok::Star, start, {}, {}};
    case '(': ++pos_; return {Tok::LParen, start, {}, {}};
    case ')': ++pos_; return {Tok::RParen, start, {}, {}};
    case '^':
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '#') {
        pos_ += 2;
        return {Tok::Sharp, start, {}, {}};
      }
      throw ParseError(ParseError::Kind::Lexical, start, "expected '^#'");
    default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number(start);
    if (std::isalpha(static_cast<unsigned char>(c))) return variable(start);
    throw ParseError(ParseError::Kind::Lexical, start, std::string("unexpected character '") + c + "'");
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits() {
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d.push_back(text_[pos_++]);
    return d;
  }

  Token number(std::size_t start) {
    std::string num = digits();
    std::string den = "1";
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = digits();
      if (den.empty()) throw ParseError(ParseError::Kind::MalformedRational, start, "missing denominator");
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      throw ParseError(ParseError::Kind::MalformedRational, start, "malformed rational");
    const Integer d(den);
    if (d == 0) throw ParseError(ParseError::Kind::MalformedRational, start, "zero denominator");
    Rational q(Integer(num), d);
    q.canonicalize();
    return {Tok::Number, start, q, {}};
  }

  Token variable(std::size_t start) {
    std::string word;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      word.push_back(text_[pos_++]);
    // y0_<idx> etc.
    if (word.size() >= 4 && word[2] == '_') {
      const std::string head = word.substr(0, 2);
      const std::string idx = word.substr(3);
      const bool numeric = !idx.empty() && idx.find_first_not_of("0123456789") == std::string::npos;
      if (numeric && idx[0] != '0' && idx.size() < 9) {
        for (VarType t : kAllVarTypes)
          if (token(t) == head) return {Tok::Var, start, {}, Variable{t, std::stoi(idx)}};
      }
    }
    throw ParseError(ParseError::Kind::UnknownVariable, start, "unknown variable '" + word + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  Parser(std::string_view text, Mode mode) : lexer_(text), mode_(mode) { advance(); }

  SuperPolynomial parse_all() {
    if (cur_.kind == Tok::End) throw ParseError(ParseError::Kind::Syntax, cur_.pos, "empty expression");
    auto f = expr();
    if (cur_.kind == Tok::RParen) throw ParseError(ParseError::Kind::UnbalancedParens, cur_.pos, "unmatched ')'");
    if (cur_.kind != Tok::End)
      throw ParseError(ParseError::Kind::Syntax, cur_.pos, "expected operator (juxtaposition is not allowed)");
    return f;
  }

private:
  void advance() { cur_ = lexer_.next(); }

  SuperPolynomial expr() {
    auto f = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const bool minus = cur_.kind == Tok::Minus;
      advance();
      auto g = term();
      if (minus) f -= g;
      else f += g;
    }
    return f;
  }

  SuperPolynomial term() {
    auto f = unary();
    while (cur_.kind == Tok::Star) {
      advance();
      f = f * unary();
    }
    return f;
  }

  SuperPolynomial unary() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return -unary();
    }
    if (cur_.kind == Tok::Plus) {
      advance();
      return unary();
    }
    return postfix();
  }

  SuperPolynomial postfix() {
    auto f = primary();
    while (cur_.kind == Tok::Sharp) {
      advance();
      f = sharp_poly(f);
    }
    return f;
  }

  SuperPolynomial primary() {
    const Token t = cur_;
    switch (t.kind) {
    case Tok::Number:
      advance();
      return SuperPolynomial::monomial(Word{}, mode_, t.number);
    case Tok::Var:
      advance();
      return SuperPolynomial::variable(t.var, mode_);
    case Tok::LParen: {
      advance();
      auto f = expr();
      if (cur_.kind != Tok::RParen)
        throw ParseError(ParseError::Kind::UnbalancedParens, t.pos, "unclosed '('");
      advance();
      return f;
    }
    case Tok::RParen: throw ParseError(ParseError::Kind::UnbalancedParens, t.pos, "unmatched ')'");
    case Tok::End: throw ParseError(ParseError::Kind::Syntax, t.pos, "unexpected end of input");
    default: throw ParseError(ParseError::Kind::Syntax, t.pos, "expected a variable, number or '('");
    }
  }

  Lexer lexer_;
  Mode mode_;
  Token cur_{Tok::End, 0, {}, {}};
};

} // namespace

SuperPolynomial parse(std::string_view text, Mode mode) {
  auto f = Parser(text, mode).parse_all();
  for (const auto& [w, c] : f.terms())
    if (w.empty())
      throw ParseError(ParseError::Kind::Syntax, 0, "bare scalar term: the free algebra has no unit");
  return f;
}

} // namespace superpi
