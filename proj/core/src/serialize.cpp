#include "wwm/serialize.hpp"

#include <stdexcept>

namespace wwm {

void to_json(nlohmann::json& j, const GaussianRational& g) {
  j = {{"re", to_string(g.re())}, {"im", to_string(g.im())}};
}

void from_json(const nlohmann::json& j, GaussianRational& g) {
  g = GaussianRational(parse_rational(j.at("re").get<std::string>()), parse_rational(j.at("im").get<std::string>()));
}

void to_json(nlohmann::json& j, const HbarCoeff& c) {
  j = nlohmann::json::array();
  for (const auto& [grade, g] : c.terms()) {
    nlohmann::json t = g;
    t["hbar"] = grade;
    j.push_back(std::move(t));
  }
}

void from_json(const nlohmann::json& j, HbarCoeff& c) {
  c = HbarCoeff();
  for (const auto& t : j) c += HbarCoeff::term(t.at("hbar").get<unsigned>(), t.get<GaussianRational>());
}

void to_json(nlohmann::json& j, const UniPoly& f) {
  j = {{"kind", "univariate"}, {"text", to_string(f)}, {"terms", nlohmann::json::array()}};
  for (const auto& [d, g] : f.terms()) {
    nlohmann::json t = g;
    t["x"] = d;
    j["terms"].push_back(std::move(t));
  }
}

void from_json(const nlohmann::json& j, UniPoly& f) {
  f = UniPoly();
  for (const auto& t : j.at("terms")) f.add_term(t.at("x").get<unsigned>(), t.get<GaussianRational>());
}

namespace detail {

template <class Tag>
void to_json(nlohmann::json& j, const BiPoly<Tag>& f) {
  constexpr bool is_op = std::is_same_v<Tag, OperatorTag>;
  j = {{"kind", is_op ? "operator" : "symbol"}, {"text", to_string(f)}, {"terms", nlohmann::json::array()}};
  for (const auto& [e, c] : f.terms()) {
    j["terms"].push_back({{is_op ? "Q" : "q", e.q}, {is_op ? "P" : "p", e.p}, {"coeff", c}});
  }
}

template <class Tag>
void from_json(const nlohmann::json& j, BiPoly<Tag>& f) {
  constexpr bool is_op = std::is_same_v<Tag, OperatorTag>;
  if (j.at("kind").get<std::string>() != (is_op ? "operator" : "symbol"))
    throw std::invalid_argument("polynomial kind mismatch in JSON");
  f = BiPoly<Tag>();
  for (const auto& t : j.at("terms")) {
    f.add_term({t.at(is_op ? "Q" : "q").template get<unsigned>(), t.at(is_op ? "P" : "p").template get<unsigned>()},
               t.at("coeff").template get<HbarCoeff>());
  }
}

template void to_json(nlohmann::json&, const BiPoly<SymbolTag>&);
template void to_json(nlohmann::json&, const BiPoly<OperatorTag>&);
template void from_json(const nlohmann::json&, BiPoly<SymbolTag>&);
template void from_json(const nlohmann::json&, BiPoly<OperatorTag>&);

}  // namespace detail

void to_json(nlohmann::json& j, const PhasePoint& pt) { j = {{"q", pt.q}, {"p", pt.p}}; }

void from_json(const nlohmann::json& j, PhasePoint& pt) {
  pt = PhasePoint::make(j.at("q").get<double>(), j.at("p").get<double>());
}

namespace {

nlohmann::json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> complex_from(const nlohmann::json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace

void to_json(nlohmann::json& j, const GapReport& r) {
  j = {{"quantity", r.quantity},
       {"function", r.function},
       {"symbol_of_fA", r.symbol_of_fA},
       {"f_of_symbol", r.f_of_symbol},
       {"gap", r.gap},
       {"hbar", to_string(r.hbar)},
       {"point", nullptr},
       {"gap_at_point", nullptr}};
  if (r.point) j["point"] = *r.point;
  if (r.gap_at_point) j["gap_at_point"] = complex_json(*r.gap_at_point);
}

void from_json(const nlohmann::json& j, GapReport& r) {
  r = GapReport();
  r.quantity = j.at("quantity").get<OpPoly>();
  r.function = j.at("function").get<UniPoly>();
  r.symbol_of_fA = j.at("symbol_of_fA").get<PhasePoly>();
  r.f_of_symbol = j.at("f_of_symbol").get<PhasePoly>();
  r.gap = j.at("gap").get<PhasePoly>();
  r.hbar = parse_rational(j.at("hbar").get<std::string>());
  if (!j.at("point").is_null()) r.point = j.at("point").get<PhasePoint>();
  if (!j.at("gap_at_point").is_null()) r.gap_at_point = complex_from(j.at("gap_at_point"));
}

void to_json(nlohmann::json& j, const HvDispersionReport& r) {
  j = {{"point", r.point},
       {"quantity", r.quantity},
       {"function", r.function},
       {"hbar", to_string(r.hbar)},
       {"aprime_reading", r.aprime_reading},
       {"assumption_I_reading", r.assumption_I_reading},
       {"gap_polynomial", r.gap_polynomial},
       {"negative", r.negative}};
}

void from_json(const nlohmann::json& j, HvDispersionReport& r) {
  r.point = j.at("point").get<PhasePoint>();
  r.quantity = j.at("quantity").get<OpPoly>();
  r.function = j.at("function").get<UniPoly>();
  r.hbar = parse_rational(j.at("hbar").get<std::string>());
  r.aprime_reading = j.at("aprime_reading").get<double>();
  r.assumption_I_reading = j.at("assumption_I_reading").get<double>();
  r.gap_polynomial = j.at("gap_polynomial").get<PhasePoly>();
  r.negative = j.at("negative").get<bool>();
}

void to_json(nlohmann::json& j, const Witness& w) {
  j = {{"name", w.name}, {"quantity", w.quantity}, {"dispersion", w.dispersion}};
}

void from_json(const nlohmann::json& j, Witness& w) {
  w.name = j.at("name").get<std::string>();
  w.quantity = j.at("quantity").get<OpPoly>();
  w.dispersion = j.at("dispersion").get<double>();
}

void to_json(nlohmann::json& j, const AverageCheck& a) { j = {{"trace", a.trace}, {"overlap", a.overlap}}; }

void from_json(const nlohmann::json& j, AverageCheck& a) {
  a.trace = j.at("trace").get<double>();
  a.overlap = j.at("overlap").get<double>();
}

}  // namespace wwm
