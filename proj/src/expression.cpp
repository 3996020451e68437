#include "nilverify/expression.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "nilverify/error.hpp"

namespace nilverify {

bool is_reserved_name(std::string_view name) { return name == "z" || name == "z6"; }

namespace {

enum class TokenKind { number, identifier, symbol, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({TokenKind::number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '~') {
      ++i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      if (i - start == 1 && c == '~') throw ParseError("'~' must prefix a generator name", start);
      out.push_back({TokenKind::identifier, std::string(s.substr(start, i - start)), start});
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({TokenKind::symbol, std::string(1, c), start});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({TokenKind::end, "", s.size()});
  return out;
}

bool is_scalar(const Form& f) { return f.is_zero() || (f.terms().size() == 1 && f.terms().begin()->first.degree() == 0); }

CycloScalar scalar_value(const Form& f) { return f.coefficient(MultiIndex(0)); }

class Parser {
 public:
  Parser(std::string_view text, const GeneratorSet* gens) : tokens_(tokenize(text)), gens_(gens) {}

  Form parse() {
    Form f = expr();
    if (peek().kind != TokenKind::end) throw ParseError("unexpected '" + peek().text + "'", peek().column);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at_symbol(char c) const { return peek().kind == TokenKind::symbol && peek().text[0] == c; }

  Form expr() {
    Form acc;
    bool negate = false;
    if (at_symbol('+') || at_symbol('-')) negate = next().text[0] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (at_symbol('+') || at_symbol('-')) {
      const bool minus = next().text[0] == '-';
      Form rhs = term();
      acc += minus ? -rhs : rhs;
    }
    return acc;
  }

  Form term() {
    Form acc = factor();
    while (at_symbol('*') || at_symbol('^') || at_symbol('/')) {
      const Token op = next();
      Form rhs = factor();
      if (op.text[0] == '/') {
        if (!is_scalar(rhs)) throw ParseError("divisor must be a scalar", op.column);
        if (rhs.is_zero()) throw ParseError("division by zero", op.column);
        acc *= inv(scalar_value(rhs));
      } else {
        acc = wedge(acc, rhs);
      }
    }
    return acc;
  }

  Form factor() {
    if (at_symbol('-')) {
      next();
      return -factor();
    }
    Form base = primary();
    if (at_symbol('^')) {
      const std::size_t save = pos_;
      const Token caret = next();
      bool negative = false;
      if (at_symbol('-')) {
        next();
        negative = true;
      }
      if (peek().kind == TokenKind::number) {
        if (!is_scalar(base)) throw ParseError("integer exponent on a non-scalar", caret.column);
        const long e = std::stol(next().text);
        if (base.is_zero() && negative) throw ParseError("zero raised to a negative power", caret.column);
        return Form(scalar_value(base).pow(negative ? -e : e));
      }
      pos_ = save;  // a wedge, handled by term()
    }
    return base;
  }

  Form primary() {
    const Token t = next();
    switch (t.kind) {
      case TokenKind::number:
        return Form(CycloScalar(Rational(t.text)));
      case TokenKind::identifier: {
        if (t.text == "z") return Form(CycloScalar::zeta(1));
        if (t.text == "z6") return Form(CycloScalar::zeta6(1));
        if (gens_ != nullptr)
          if (const auto idx = gens_->index_of(t.text)) return Form::generator(*idx);
        throw ParseError("unknown generator '" + t.text + "'", t.column, true);
      }
      case TokenKind::symbol:
        if (t.text[0] == '(') {
          Form inner = expr();
          if (!at_symbol(')')) throw ParseError("expected ')'", peek().column);
          next();
          return inner;
        }
        throw ParseError("unexpected '" + t.text + "'", t.column);
      case TokenKind::end:
        throw ParseError("unexpected end of expression", t.column);
    }
    throw ParseError("unreachable", t.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const GeneratorSet* gens_;
};

}  // namespace

Form parse_form(std::string_view text, const GeneratorSet& gens) { return Parser(text, &gens).parse(); }

CycloScalar parse_scalar(std::string_view text) {
  const Form f = Parser(text, nullptr).parse();
  return scalar_value(f);
}

}  // namespace nilverify
