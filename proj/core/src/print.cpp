#include <algorithm>
#include <string>
#include <vector>

#include "wwm/expr.hpp"

namespace wwm {
namespace {

struct PrintTerm {
  unsigned q = 0;  // first variable exponent
  unsigned p = 0;  // second variable exponent
  unsigned grade = 0;
  bool imaginary = false;
  Rational value;
};

std::string power(const char* name, unsigned k) {
  std::string s = name;
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

std::string render(std::vector<PrintTerm> terms, const char* first_var, const char* second_var) {
  if (terms.empty()) return "0";
  std::stable_sort(terms.begin(), terms.end(), [](const PrintTerm& a, const PrintTerm& b) {
    if (a.q + a.p != b.q + b.p) return a.q + a.p > b.q + b.p;
    if (a.q != b.q) return a.q > b.q;
    if (a.grade != b.grade) return a.grade < b.grade;
    return !a.imaginary && b.imaginary;
  });
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.value) < 0;
    const Rational magnitude = abs(t.value);
    std::vector<std::string> factors;
    if (t.imaginary) factors.emplace_back("i");
    if (t.grade > 0) factors.push_back(power("hbar", t.grade));
    if (t.q > 0) factors.push_back(power(first_var, t.q));
    if (t.p > 0) factors.push_back(power(second_var, t.p));
    if (magnitude != 1 || factors.empty()) {
      const std::string m = to_string(Rational(magnitude));
      factors.insert(factors.begin(), magnitude.get_den() == 1 ? m : "(" + m + ")");
    }
    std::string body;
    for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
    if (first) out += negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

template <class Tag>
std::vector<PrintTerm> collect(const detail::BiPoly<Tag>& f) {
  std::vector<PrintTerm> terms;
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [grade, g] : c.terms()) {
      if (sgn(g.re()) != 0) terms.push_back({e.q, e.p, grade, false, g.re()});
      if (sgn(g.im()) != 0) terms.push_back({e.q, e.p, grade, true, g.im()});
    }
  }
  return terms;
}

}  // namespace

std::string to_string(const PhasePoly& f) { return render(collect(f), "q", "p"); }

std::string to_string(const OpPoly& a) { return render(collect(a), "Q", "P"); }

std::string to_string(const UniPoly& f) {
  std::vector<PrintTerm> terms;
  for (const auto& [d, g] : f.terms()) {
    if (sgn(g.re()) != 0) terms.push_back({d, 0, 0, false, g.re()});
    if (sgn(g.im()) != 0) terms.push_back({d, 0, 0, true, g.im()});
  }
  return render(std::move(terms), "x", "");
}

}  // namespace wwm
