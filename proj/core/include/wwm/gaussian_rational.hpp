#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace wwm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-3/4" or a finite decimal such as "0.25" or "-1.5e-3"
/// into an exact rational. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational exact_rational(double x);

/// Exact complex rational a + b i. Both parts are kept canonical.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0);  // NOLINT(implicit)
  GaussianRational(long value) : re_(value) {}     // NOLINT(implicit)
  GaussianRational(int value) : re_(value) {}      // NOLINT(implicit)

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// (i/2)^n and (-i)^n show up in every reordering and star coefficient.
GaussianRational pow(const GaussianRational& base, unsigned exponent);

std::string to_string(const GaussianRational& g);

}  // namespace wwm
