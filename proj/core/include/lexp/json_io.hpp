#pragma once

#include <nlohmann/json.hpp>

#include "lexp/admissibility.hpp"
#include "lexp/asymptotics.hpp"
#include "lexp/catalog.hpp"
#include "lexp/optimizer.hpp"
#include "lexp/rational.hpp"
#include "lexp/scheme.hpp"

// JSON bindings for every domain type. Rationals serialize as
// {"num": "...", "den": "...", "approx": "..."} with a 4-digit decimal
// approximation; parsing reads num/den and ignores the approximation.
// Scheme output additionally carries the (1/p, gamma) points and segment
// endpoints of each interpolation, which is enough to plot the scheme.

namespace lexp {

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const ExponentPoint& p);
void from_json(const nlohmann::json& j, ExponentPoint& p);

std::string_view to_string(StepSource source);
void to_json(nlohmann::json& j, const SchemeStep& step);
void from_json(const nlohmann::json& j, SchemeStep& step);

void to_json(nlohmann::json& j, const Scheme& scheme);
void from_json(const nlohmann::json& j, Scheme& scheme);

void to_json(nlohmann::json& j, const StepMargins& margins);
void from_json(const nlohmann::json& j, StepMargins& margins);

void to_json(nlohmann::json& j, const AdmissibilityReport& report);
void from_json(const nlohmann::json& j, AdmissibilityReport& report);

void to_json(nlohmann::json& j, const PerturbedScheme& scheme);
void from_json(const nlohmann::json& j, PerturbedScheme& scheme);

void to_json(nlohmann::json& j, const RemainderReport& report);
void from_json(const nlohmann::json& j, RemainderReport& report);

}  // namespace lexp
