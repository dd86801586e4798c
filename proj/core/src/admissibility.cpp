#include "lexp/admissibility.hpp"

namespace lexp {

namespace {

Rational point_transverse_margin(int n, int m, const ExponentPoint& pt) {
  return Rational(n + 1 - m) * (Rational(1, 2) - pt.inv_p) + Rational(2) * pt.gamma;
}

}  // namespace

Rational cellular_margin(const SchemeStep& step) {
  if (step.m < 3) throw std::domain_error("cellular_margin: m must be >= 3");
  return Rational(step.m - 1, 2L * step.m) - step.inv_p;
}

Rational transverse_margin(int n, const SchemeStep& step) {
  if (step.m < 3) throw std::domain_error("transverse_margin: m must be >= 3");
  return point_transverse_margin(n, step.m, step.point());
}

Rational transverse_margin_lower_bound(int m) {
  if (m < 3) throw std::domain_error("transverse_margin_lower_bound: m must be >= 3");
  const long lm = m;
  // 2m^3 - 6m^2 + 4 = 2m^2(m-3) + 4 > 0 for m >= 3.
  return Rational((lm - 2) * (lm - 3), 2 * lm * lm * lm - 6 * lm * lm + 4);
}

TangentialCheck tangential_check(const ExponentPoint& prev, const ExponentPoint& w,
                                 const ExponentPoint& step) {
  if (prev == w) throw std::invalid_argument("tangential_check: degenerate segment");
  const Rational det = (w.inv_p - prev.inv_p) * (step.gamma - prev.gamma) -
                       (w.gamma - prev.gamma) * (step.inv_p - prev.inv_p);
  const Rational alpha = (w.inv_p != prev.inv_p)
                             ? (w.inv_p - step.inv_p) / (w.inv_p - prev.inv_p)
                             : (w.gamma - step.gamma) / (w.gamma - prev.gamma);
  return {det.is_zero(), alpha >= Rational(0) && alpha <= Rational(1)};
}

AdmissibilityReport check_scheme(const Scheme& scheme) {
  const int n = scheme.n;
  AdmissibilityReport report;
  report.n = n;

  bool margins_ok = true;
  bool tangential_all = true;
  bool chain_ok = true;

  const SchemeStep* prev = nullptr;
  for (const SchemeStep& step : scheme.steps) {
    if (step.m == 2) continue;  // alias of m = 3, excluded from reporting
    StepMargins entry;
    entry.m = step.m;
    entry.cellular_margin = cellular_margin(step);
    entry.transverse_margin = transverse_margin(n, step);
    if (step.m >= 4) {
      const ExponentPoint w = weighted_point(n, step.m);
      const TangentialCheck tc = tangential_check(prev->point(), w, step.point());
      entry.tangential_ok = tc.collinear && tc.alpha_in_unit;
      // Inductive chain bound: the transverse margin at m dominates
      //   alpha * (-(1/2 - 1/p_{m-1})) + (1 - alpha) * (m-3)/(m-2),
      // which for the canonical step equals transverse_margin_lower_bound(m).
      const Rational bound = step.alpha * (prev->inv_p - Rational(1, 2)) +
                             (Rational(1) - step.alpha) * Rational(step.m - 3, step.m - 2);
      chain_ok = chain_ok && entry.transverse_margin >= bound;
    }
    margins_ok = margins_ok && entry.cellular_margin.sign() >= 0 &&
                 entry.transverse_margin.sign() >= 0;
    tangential_all = tangential_all && entry.tangential_ok;
    report.per_step.push_back(entry);
    prev = &step;
  }

  // Closing level M+1: the final exponent paired with its target gamma.
  const SchemeStep& step_M = scheme.last_step();
  const int m_close = scheme.M + 1;
  const ExponentPoint w_close = weighted_point(n, m_close);
  const Rational gamma_close = closing_gamma(scheme);
  const Rational inv_p_final = scheme.p_final.reciprocal();
  const SchemeStep closing{m_close, inv_p_final, gamma_close, scheme.closing_alpha,
                           StepSource::Closing};

  StepMargins closing_entry;
  closing_entry.m = m_close;
  closing_entry.cellular_margin = cellular_margin(closing);
  closing_entry.transverse_margin = transverse_margin(n, closing);
  const TangentialCheck tc = tangential_check(step_M.point(), w_close, closing.point());
  closing_entry.tangential_ok = tc.collinear && tc.alpha_in_unit;
  margins_ok = margins_ok && closing_entry.cellular_margin.sign() >= 0 &&
               closing_entry.transverse_margin.sign() >= 0;
  tangential_all = tangential_all && closing_entry.tangential_ok;
  report.per_step.push_back(closing_entry);

  report.bracketing_ok = inv_p_final > Rational(scheme.M - 1, 2L * scheme.M) &&
                         inv_p_final <= Rational(scheme.M, 2L * (scheme.M + 1));
  report.closing_alpha_in_open_unit =
      scheme.closing_alpha > Rational(0) && scheme.closing_alpha < Rational(1);
  report.closing_weighted_gamma_positive = w_close.gamma.sign() > 0;

  report.overall = margins_ok && tangential_all && chain_ok && report.bracketing_ok &&
                   report.closing_alpha_in_open_unit && report.closing_weighted_gamma_positive;
  return report;
}

AdmissibilityReport check_scheme(int n) { return check_scheme(build_scheme(n)); }

}  // namespace lexp
