#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wwm/errors.hpp"
#include "wwm/uni_poly.hpp"

namespace wwm {

/// Which variables an expression may use: Q,P for operators, q,p for
/// symbols, x for univariate functions.
enum class Mode { operator_expr, symbol_expr, univariate_expr };

/// Syntax tree produced by parse().
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ('^' NAT)? ('/' NAT)?
///   atom   := RATIONAL | 'i' | 'hbar' | VAR | '(' expr ')'
struct ExprAst {
  enum class Kind { rational, imag_unit, hbar, variable, negate, sum, difference, product, power, divide };

  Kind kind = Kind::rational;
  std::size_t offset = 0;
  Rational value{0};   // rational
  char variable = 0;   // variable
  unsigned natural = 0;  // power exponent or divisor
  std::vector<ExprAst> children;
};

ExprAst parse(std::string_view text, Mode mode);

/// Lowering into the exact algebra of the mode. Operator products go
/// through normal ordering, so they are order-sensitive.
PhasePoly lower_symbol(const ExprAst& ast);
OpPoly lower_operator(const ExprAst& ast);
UniPoly lower_univariate(const ExprAst& ast);

inline PhasePoly parse_symbol(std::string_view text) { return lower_symbol(parse(text, Mode::symbol_expr)); }
inline OpPoly parse_operator(std::string_view text) { return lower_operator(parse(text, Mode::operator_expr)); }
inline UniPoly parse_univariate(std::string_view text) {
  return lower_univariate(parse(text, Mode::univariate_expr));
}

/// Canonical text: monomials by total degree then q-degree (both
/// descending), split by ħ-power and real/imaginary part. Re-parses to an
/// equal value.
std::string to_string(const PhasePoly& f);
std::string to_string(const OpPoly& a);
std::string to_string(const UniPoly& f);

}  // namespace wwm
