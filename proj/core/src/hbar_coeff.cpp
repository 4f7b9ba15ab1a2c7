#include "wwm/hbar_coeff.hpp"

namespace wwm {

HbarCoeff::HbarCoeff(const GaussianRational& constant) { add_term(0, constant); }

HbarCoeff HbarCoeff::term(unsigned grade, const GaussianRational& c) {
  HbarCoeff r;
  r.add_term(grade, c);
  return r;
}

unsigned HbarCoeff::max_grade() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

GaussianRational HbarCoeff::at(unsigned grade) const {
  auto it = terms_.find(grade);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void HbarCoeff::add_term(unsigned grade, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(grade, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HbarCoeff HbarCoeff::shifted(unsigned k) const {
  HbarCoeff r;
  for (const auto& [g, c] : terms_) r.terms_.emplace(g + k, c);
  return r;
}

HbarCoeff HbarCoeff::conj() const {
  HbarCoeff r;
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, c.conj());
  return r;
}

GaussianRational HbarCoeff::substitute(const Rational& hbar) const {
  GaussianRational sum;
  Rational power(1);
  unsigned at_grade = 0;
  for (const auto& [g, c] : terms_) {
    for (; at_grade < g; ++at_grade) power *= hbar;
    sum += c * GaussianRational(power);
  }
  return sum;
}

HbarCoeff HbarCoeff::truncated(unsigned limit) const {
  HbarCoeff r;
  for (const auto& [g, c] : terms_)
    if (g < limit) r.terms_.emplace(g, c);
  return r;
}

HbarCoeff& HbarCoeff::operator+=(const HbarCoeff& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

HbarCoeff& HbarCoeff::operator-=(const HbarCoeff& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

HbarCoeff& HbarCoeff::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

HbarCoeff operator*(const HbarCoeff& a, const HbarCoeff& b) {
  HbarCoeff r;
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_) r.add_term(ga + gb, ca * cb);
  return r;
}

HbarCoeff HbarCoeff::operator-() const {
  HbarCoeff r;
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

}  // namespace wwm
