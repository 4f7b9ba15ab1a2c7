#pragma once

#include <map>

#include "wwm/op_poly.hpp"

namespace wwm {

/// Univariate polynomial f(x) = sum c_k x^k with Gaussian-rational
/// coefficients. Applied to operators by operator arithmetic and to symbols
/// by ordinary (commutative) arithmetic.
class UniPoly {
 public:
  using Terms = std::map<unsigned, GaussianRational>;

  UniPoly() = default;

  static UniPoly monomial(unsigned degree, const GaussianRational& c = 1);
  static UniPoly x() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(unsigned degree, const GaussianRational& c);

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  Terms terms_;
};

/// f(Â) via Horner's scheme in the operator algebra.
OpPoly apply(const UniPoly& f, const OpPoly& a);
/// f(Ã) via Horner's scheme with the commutative product.
PhasePoly apply(const UniPoly& f, const PhasePoly& a);

}  // namespace wwm
