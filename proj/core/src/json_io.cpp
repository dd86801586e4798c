#include "lexp/json_io.hpp"

namespace lexp {

using nlohmann::json;

void to_json(json& j, const Rational& r) {
  j = json{{"num", r.num().get_str()}, {"den", r.den().get_str()}, {"approx", r.to_decimal(4)}};
}

void from_json(const json& j, Rational& r) {
  r = Rational(mpz_class(j.at("num").get<std::string>()),
               mpz_class(j.at("den").get<std::string>()));
}

void to_json(json& j, const ExponentPoint& p) {
  j = json{{"inv_p", p.inv_p}, {"gamma", p.gamma}};
}

void from_json(const json& j, ExponentPoint& p) {
  j.at("inv_p").get_to(p.inv_p);
  j.at("gamma").get_to(p.gamma);
}

std::string_view to_string(StepSource source) {
  switch (source) {
    case StepSource::Base: return "base";
    case StepSource::CellularSaturation: return "cellular_saturation";
    case StepSource::Closing: return "closing";
  }
  throw std::invalid_argument("unknown step source");
}

namespace {

StepSource source_from_string(std::string_view name) {
  if (name == "base") return StepSource::Base;
  if (name == "cellular_saturation") return StepSource::CellularSaturation;
  if (name == "closing") return StepSource::Closing;
  throw std::invalid_argument("unknown step source '" + std::string(name) + "'");
}

}  // namespace

void to_json(json& j, const SchemeStep& step) {
  j = json{{"m", step.m},
           {"inv_p", step.inv_p},
           {"gamma", step.gamma},
           {"alpha", step.alpha},
           {"source", std::string(to_string(step.source))}};
}

void from_json(const json& j, SchemeStep& step) {
  j.at("m").get_to(step.m);
  j.at("inv_p").get_to(step.inv_p);
  j.at("gamma").get_to(step.gamma);
  j.at("alpha").get_to(step.alpha);
  step.source = source_from_string(j.at("source").get<std::string>());
}

void to_json(json& j, const Scheme& scheme) {
  json steps = json::array();
  for (const SchemeStep& step : scheme.steps) {
    json entry = step;
    if (step.source == StepSource::CellularSaturation) {
      entry["segment"] = json{{"from", scheme.step(step.m - 1).point()},
                              {"to", weighted_point(scheme.n, step.m)}};
    }
    steps.push_back(std::move(entry));
  }
  const ExponentPoint closing_pt{scheme.p_final.reciprocal(), closing_gamma(scheme)};
  j = json{{"n", scheme.n},
           {"M", scheme.M},
           {"steps", std::move(steps)},
           {"closing_alpha", scheme.closing_alpha},
           {"p_final", scheme.p_final},
           {"closing", json{{"point", closing_pt},
                            {"segment", json{{"from", scheme.last_step().point()},
                                             {"to", weighted_point(scheme.n, scheme.M + 1)}}}}}};
}

void from_json(const json& j, Scheme& scheme) {
  j.at("n").get_to(scheme.n);
  j.at("M").get_to(scheme.M);
  scheme.steps.clear();
  for (const json& entry : j.at("steps")) scheme.steps.push_back(entry.get<SchemeStep>());
  j.at("closing_alpha").get_to(scheme.closing_alpha);
  j.at("p_final").get_to(scheme.p_final);
}

void to_json(json& j, const StepMargins& margins) {
  j = json{{"m", margins.m},
           {"cellular_margin", margins.cellular_margin},
           {"transverse_margin", margins.transverse_margin},
           {"tangential_ok", margins.tangential_ok}};
}

void from_json(const json& j, StepMargins& margins) {
  j.at("m").get_to(margins.m);
  j.at("cellular_margin").get_to(margins.cellular_margin);
  j.at("transverse_margin").get_to(margins.transverse_margin);
  j.at("tangential_ok").get_to(margins.tangential_ok);
}

void to_json(json& j, const AdmissibilityReport& report) {
  j = json{{"n", report.n},
           {"per_step", report.per_step},
           {"bracketing_ok", report.bracketing_ok},
           {"closing_alpha_in_open_unit", report.closing_alpha_in_open_unit},
           {"closing_weighted_gamma_positive", report.closing_weighted_gamma_positive},
           {"overall", report.overall}};
}

void from_json(const json& j, AdmissibilityReport& report) {
  j.at("n").get_to(report.n);
  report.per_step.clear();
  for (const json& entry : j.at("per_step")) report.per_step.push_back(entry.get<StepMargins>());
  j.at("bracketing_ok").get_to(report.bracketing_ok);
  j.at("closing_alpha_in_open_unit").get_to(report.closing_alpha_in_open_unit);
  j.at("closing_weighted_gamma_positive").get_to(report.closing_weighted_gamma_positive);
  j.at("overall").get_to(report.overall);
}

void to_json(json& j, const PerturbedScheme& scheme) {
  to_json(j, scheme.scheme);
  json overrides = json::object();
  for (const auto& [m, alpha] : scheme.overrides) overrides[std::to_string(m)] = alpha;
  j["overrides"] = std::move(overrides);
  j["admissible"] = scheme.admissible;
}

void from_json(const json& j, PerturbedScheme& scheme) {
  from_json(j, scheme.scheme);
  scheme.n = scheme.scheme.n;
  scheme.overrides.clear();
  for (const auto& [key, value] : j.at("overrides").items()) {
    scheme.overrides.emplace(std::stoi(key), value.get<Rational>());
  }
  j.at("admissible").get_to(scheme.admissible);
}

void to_json(json& j, const RemainderReport& report) {
  json samples = json::array();
  for (const RemainderSample& sample : report.samples) {
    samples.push_back(json{{"n", sample.n}, {"remainder_times_n2", sample.remainder_times_n2}});
  }
  j = json{{"target", std::string(to_string(report.target))},
           {"samples", std::move(samples)},
           {"max_abs", report.max_abs},
           {"precision_digits", report.precision_digits}};
}

void from_json(const json& j, RemainderReport& report) {
  const auto target = target_from_string(j.at("target").get<std::string>());
  if (!target) throw std::invalid_argument("unknown asymptotics target in JSON");
  report.target = *target;
  report.samples.clear();
  for (const json& entry : j.at("samples")) {
    report.samples.push_back(
        {entry.at("n").get<int>(), entry.at("remainder_times_n2").get<std::string>()});
  }
  j.at("max_abs").get_to(report.max_abs);
  j.at("precision_digits").get_to(report.precision_digits);
}

}  // namespace lexp
