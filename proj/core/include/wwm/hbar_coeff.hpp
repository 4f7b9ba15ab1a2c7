#pragma once

#include <map>

#include "wwm/gaussian_rational.hpp"

namespace wwm {

/// A coefficient polynomial in a symbolic ħ: sum over k of c_k ħ^k with
/// Gaussian-rational c_k. Zero terms are never stored, so the empty map is 0.
class HbarCoeff {
 public:
  using Terms = std::map<unsigned, GaussianRational>;

  HbarCoeff() = default;
  HbarCoeff(const GaussianRational& constant);  // NOLINT(implicit)
  HbarCoeff(const Rational& constant) : HbarCoeff(GaussianRational(constant)) {}  // NOLINT
  HbarCoeff(int constant) : HbarCoeff(GaussianRational(constant)) {}  // NOLINT

  /// c ħ^grade
  static HbarCoeff term(unsigned grade, const GaussianRational& c);
  static HbarCoeff hbar() { return term(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest ħ-grade present; 0 for the zero coefficient.
  unsigned max_grade() const;
  /// Coefficient of ħ^grade (zero when absent).
  GaussianRational at(unsigned grade) const;

  /// Multiplies by ħ^k.
  HbarCoeff shifted(unsigned k) const;
  HbarCoeff conj() const;
  /// Exact value with ħ replaced by a rational number.
  GaussianRational substitute(const Rational& hbar) const;
  /// Keeps only grades < limit.
  HbarCoeff truncated(unsigned limit) const;

  HbarCoeff& operator+=(const HbarCoeff& o);
  HbarCoeff& operator-=(const HbarCoeff& o);
  HbarCoeff& operator*=(const GaussianRational& s);

  friend HbarCoeff operator+(HbarCoeff a, const HbarCoeff& b) { return a += b; }
  friend HbarCoeff operator-(HbarCoeff a, const HbarCoeff& b) { return a -= b; }
  friend HbarCoeff operator*(const HbarCoeff& a, const HbarCoeff& b);
  friend HbarCoeff operator*(HbarCoeff a, const GaussianRational& s) { return a *= s; }
  HbarCoeff operator-() const;

  friend bool operator==(const HbarCoeff&, const HbarCoeff&) = default;

 private:
  void add_term(unsigned grade, const GaussianRational& c);

  Terms terms_;
};

}  // namespace wwm
