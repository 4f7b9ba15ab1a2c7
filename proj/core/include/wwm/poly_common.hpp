#pragma once

#include <algorithm>
#include <compare>
#include <map>

#include "wwm/hbar_coeff.hpp"

namespace wwm {

/// Exponent pair of a two-variable monomial. For symbols it is q^q p^p; for
/// operators it is the normal-ordered word Q^q P^p.
struct Exponents {
  unsigned q = 0;
  unsigned p = 0;

  unsigned total() const { return q + p; }
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

namespace detail {

/// Sparse map Exponents -> HbarCoeff with zero pruning. Shared storage for
/// the commutative (symbol) and normal-ordered (operator) polynomial types;
/// the tag keeps the two from mixing.
template <class Tag>
class BiPoly {
 public:
  using Terms = std::map<Exponents, HbarCoeff>;

  BiPoly() = default;

  static BiPoly monomial(unsigned q, unsigned p, const HbarCoeff& c = HbarCoeff(1)) {
    BiPoly r;
    r.add_term({q, p}, c);
    return r;
  }
  static BiPoly constant(const HbarCoeff& c) { return monomial(0, 0, c); }
  static BiPoly one() { return constant(HbarCoeff(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree in the two variables; 0 for constants and for zero.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
  }

  HbarCoeff coefficient(unsigned q, unsigned p) const {
    auto it = terms_.find({q, p});
    return it == terms_.end() ? HbarCoeff() : it->second;
  }

  void add_term(Exponents e, const HbarCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  BiPoly operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  /// Scalar multiple; scalars (including ħ powers) commute with everything.
  friend BiPoly scale(const HbarCoeff& s, const BiPoly& a) {
    BiPoly r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  Terms terms_;
};

}  // namespace detail
}  // namespace wwm
