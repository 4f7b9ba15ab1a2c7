#pragma once

#include <nlohmann/json.hpp>

#include "wwm/expr.hpp"
#include "wwm/moyal.hpp"
#include "wwm/vn.hpp"

namespace wwm {

// Exact values serialise rationals as "p/q" strings and ħ-grades as
// integers, so every report round-trips losslessly.

void to_json(nlohmann::json& j, const GaussianRational& g);
void from_json(const nlohmann::json& j, GaussianRational& g);

void to_json(nlohmann::json& j, const HbarCoeff& c);
void from_json(const nlohmann::json& j, HbarCoeff& c);

void to_json(nlohmann::json& j, const UniPoly& f);
void from_json(const nlohmann::json& j, UniPoly& f);

void to_json(nlohmann::json& j, const PhasePoint& pt);
void from_json(const nlohmann::json& j, PhasePoint& pt);

void to_json(nlohmann::json& j, const GapReport& r);
void from_json(const nlohmann::json& j, GapReport& r);

void to_json(nlohmann::json& j, const HvDispersionReport& r);
void from_json(const nlohmann::json& j, HvDispersionReport& r);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

void to_json(nlohmann::json& j, const AverageCheck& a);
void from_json(const nlohmann::json& j, AverageCheck& a);

namespace detail {
template <class Tag>
void to_json(nlohmann::json& j, const BiPoly<Tag>& f);
template <class Tag>
void from_json(const nlohmann::json& j, BiPoly<Tag>& f);
}  // namespace detail

}  // namespace wwm
