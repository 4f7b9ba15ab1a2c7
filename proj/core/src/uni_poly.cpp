#include "wwm/uni_poly.hpp"

namespace wwm {

UniPoly UniPoly::monomial(unsigned degree, const GaussianRational& c) {
  UniPoly r;
  r.add_term(degree, c);
  return r;
}

void UniPoly::add_term(unsigned degree, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

namespace {

template <class Poly>
Poly horner(const UniPoly& f, const Poly& x) {
  Poly acc;
  if (f.is_zero()) return acc;
  for (unsigned d = f.degree() + 1; d-- > 0;) {
    acc = acc * x;
    auto it = f.terms().find(d);
    if (it != f.terms().end()) acc += Poly::constant(HbarCoeff(it->second));
  }
  return acc;
}

}  // namespace

OpPoly apply(const UniPoly& f, const OpPoly& a) { return horner(f, a); }
PhasePoly apply(const UniPoly& f, const PhasePoly& a) { return horner(f, a); }

}  // namespace wwm
