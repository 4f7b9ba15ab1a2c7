#include "wwm/expr.hpp"

#include <cctype>
#include <string>
#include <utility>

namespace wwm {
namespace {

using Kind = ExprAst::Kind;

class Parser {
 public:
  Parser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

  ExprAst parse_all() {
    skip_space();
    if (pos_ == text_.size()) fail(ParseError::Kind::unexpected_token, "empty expression");
    ExprAst root = expr();
    skip_space();
    if (pos_ != text_.size()) fail_unexpected();
    return root;
  }

 private:
  [[noreturn]] void fail(ParseError::Kind kind, const std::string& message) const {
    throw ParseError(kind, pos_, message);
  }

  // Characters outside the token alphabet are lexical errors wherever they appear.
  [[noreturn]] void fail_unexpected(const std::string& prefix = "") const {
    if (pos_ < text_.size()) {
      const unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalnum(c) && !std::isspace(c) && std::string_view("+-*/^()._").find(text_[pos_]) == std::string_view::npos)
        fail(ParseError::Kind::lexical, std::string("unexpected character '") + text_[pos_] + "'");
    }
    fail(ParseError::Kind::unexpected_token, prefix + unexpected_message());
  }

  std::string unexpected_message() const {
    if (pos_ >= text_.size()) return "unexpected end of input";
    return std::string("unexpected '") + text_[pos_] + "'";
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprAst node(Kind kind, std::size_t offset) {
    ExprAst n;
    n.kind = kind;
    n.offset = offset;
    return n;
  }

  static ExprAst binary(Kind kind, std::size_t offset, ExprAst lhs, ExprAst rhs) {
    ExprAst n = node(kind, offset);
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) lhs = binary(Kind::sum, at, std::move(lhs), term());
      else if (accept('-')) lhs = binary(Kind::difference, at, std::move(lhs), term());
      else return lhs;
    }
  }

  ExprAst term() {
    ExprAst lhs = factor();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = binary(Kind::product, at, std::move(lhs), factor());
    }
  }

  ExprAst factor() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      ExprAst n = node(Kind::negate, at);
      n.children.push_back(factor());
      return n;
    }
    ExprAst base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      const std::size_t op = pos_++;
      ExprAst n = node(Kind::power, op);
      n.natural = natural();
      n.children.push_back(std::move(base));
      base = std::move(n);
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      const std::size_t op = pos_++;
      ExprAst n = node(Kind::divide, op);
      n.natural = natural();
      if (n.natural == 0) {
        pos_ = op + 1;
        fail(ParseError::Kind::lexical, "division by zero");
      }
      n.children.push_back(std::move(base));
      base = std::move(n);
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned natural() {
    skip_space();
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.empty()) fail_unexpected("expected a natural number, got ");
    if (d.size() > 6) {
      pos_ = start;
      fail(ParseError::Kind::lexical, "natural number too large");
    }
    return static_cast<unsigned>(std::stoul(d));
  }

  bool variable_allowed(char v) const {
    switch (mode_) {
      case Mode::operator_expr: return v == 'Q' || v == 'P';
      case Mode::symbol_expr: return v == 'q' || v == 'p';
      case Mode::univariate_expr: return v == 'x';
    }
    return false;
  }

  static const char* mode_name(Mode m) {
    switch (m) {
      case Mode::operator_expr: return "operator";
      case Mode::symbol_expr: return "symbol";
      case Mode::univariate_expr: return "univariate";
    }
    return "?";
  }

  ExprAst atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail(ParseError::Kind::unexpected_token, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      // "3/4" is one token only when the digit follows the slash directly.
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        den = digits();
        if (Integer(den, 10) == 0) {
          pos_ = at;
          fail(ParseError::Kind::lexical, "zero denominator");
        }
      }
      ExprAst n = node(Kind::rational, at);
      n.value = Rational(Integer(num, 10), Integer(den, 10));
      n.value.canonicalize();
      return n;
    }
    if (c == '(') {
      ++pos_;
      ExprAst inner = expr();
      if (!accept(')')) fail_unexpected("expected ')', got ");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "hbar") {
        if (mode_ == Mode::univariate_expr)
          fail(ParseError::Kind::mode_violation, "hbar is not allowed in a univariate function");
        pos_ = end;
        return node(Kind::hbar, at);
      }
      if (word == "i") {
        pos_ = end;
        return node(Kind::imag_unit, at);
      }
      if (word.size() == 1 && (c == 'q' || c == 'p' || c == 'Q' || c == 'P' || c == 'x')) {
        if (!variable_allowed(c))
          fail(ParseError::Kind::mode_violation,
               std::string("variable '") + c + "' not allowed in " + mode_name(mode_) + " mode");
        pos_ = end;
        ExprAst n = node(Kind::variable, at);
        n.variable = c;
        return n;
      }
      fail(ParseError::Kind::lexical, "unknown identifier '" + std::string(word) + "'");
    }
    if (c == ')' || c == '+' || c == '*' || c == '^' || c == '/')
      fail_unexpected();
    fail(ParseError::Kind::lexical, std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Mode mode_;
  std::size_t pos_ = 0;
};

// Shared lowering over the three algebras.
template <class Value, class Leaf>
Value lower(const ExprAst& ast, const Leaf& leaf) {
  switch (ast.kind) {
    case Kind::rational:
    case Kind::imag_unit:
    case Kind::hbar:
    case Kind::variable:
      return leaf(ast);
    case Kind::negate:
      return -lower<Value>(ast.children[0], leaf);
    case Kind::sum:
      return lower<Value>(ast.children[0], leaf) + lower<Value>(ast.children[1], leaf);
    case Kind::difference:
      return lower<Value>(ast.children[0], leaf) - lower<Value>(ast.children[1], leaf);
    case Kind::product:
      return lower<Value>(ast.children[0], leaf) * lower<Value>(ast.children[1], leaf);
    case Kind::power: {
      const Value base = lower<Value>(ast.children[0], leaf);
      ExprAst one;
      one.value = 1;
      Value result = leaf(one);
      for (unsigned k = 0; k < ast.natural; ++k) result = result * base;
      return result;
    }
    case Kind::divide: {
      const Value inner = lower<Value>(ast.children[0], leaf);
      ExprAst recip;
      recip.value = Rational(1, ast.natural);
      return inner * leaf(recip);
    }
  }
  return Value();
}

}  // namespace

ExprAst parse(std::string_view text, Mode mode) { return Parser(text, mode).parse_all(); }

PhasePoly lower_symbol(const ExprAst& ast) {
  return lower<PhasePoly>(ast, [](const ExprAst& n) -> PhasePoly {
    switch (n.kind) {
      case Kind::imag_unit: return symbols::i();
      case Kind::hbar: return symbols::hbar();
      case Kind::variable: return n.variable == 'q' ? symbols::q() : symbols::p();
      default: return PhasePoly::constant(HbarCoeff(n.value));
    }
  });
}

OpPoly lower_operator(const ExprAst& ast) {
  return lower<OpPoly>(ast, [](const ExprAst& n) -> OpPoly {
    switch (n.kind) {
      case Kind::imag_unit: return OpPoly::constant(GaussianRational::i());
      case Kind::hbar: return OpPoly::constant(HbarCoeff::hbar());
      case Kind::variable: return n.variable == 'Q' ? operators::Q() : operators::P();
      default: return OpPoly::constant(HbarCoeff(n.value));
    }
  });
}

UniPoly lower_univariate(const ExprAst& ast) {
  return lower<UniPoly>(ast, [](const ExprAst& n) -> UniPoly {
    switch (n.kind) {
      case Kind::imag_unit: return UniPoly::monomial(0, GaussianRational::i());
      case Kind::variable: return UniPoly::x();
      case Kind::hbar: throw ParseError(ParseError::Kind::mode_violation, n.offset, "hbar in univariate function");
      default: return UniPoly::monomial(0, n.value);
    }
  });
}

}  // namespace wwm
