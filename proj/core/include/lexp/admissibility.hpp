#pragma once

#include <vector>

#include "lexp/scheme.hpp"

namespace lexp {

/// Signed margins of one induction stage against the closing conditions.
/// Margins are exact signed values, not booleans: non-negative means the
/// condition holds, and the magnitudes feed the optimizer's feasibility
/// intervals.
struct StepMargins {
  int m = 0;
  Rational cellular_margin;    // (m-1)/(2m) - 1/p_m
  Rational transverse_margin;  // (n+1-m)(1/2 - 1/p_m) + 2 gamma_m
  bool tangential_ok = true;

  bool operator==(const StepMargins&) const = default;
};

struct AdmissibilityReport {
  int n = 0;
  std::vector<StepMargins> per_step;  // m = 3..M plus the closing level M+1
  bool bracketing_ok = false;               // (M-1)/(2M) < 1/p_final <= M/(2(M+1))
  bool closing_alpha_in_open_unit = false;  // alpha_{M+1} strictly in (0, 1)
  bool closing_weighted_gamma_positive = false;
  bool overall = false;

  bool operator==(const AdmissibilityReport&) const = default;
};

/// Cellular condition p_m >= 2m/(m-1), as the slack (m-1)/(2m) - 1/p_m.
Rational cellular_margin(const SchemeStep& step);

/// Transverse condition (n+1-m)(1/2 - 1/p_m) + 2 gamma_m >= 0, as its exact
/// left-hand side.
Rational transverse_margin(int n, const SchemeStep& step);

/// Closed-form lower bound (m-2)(m-3)/(2m^3 - 6m^2 + 4) on the transverse
/// margin of the canonical step at m. Strictly positive for m >= 4; zero at
/// the m = 3 boundary, where the margin itself is exactly zero.
Rational transverse_margin_lower_bound(int m);

struct TangentialCheck {
  bool collinear = false;
  // Affine weight of `step` on `prev` lies in [0, 1]; meaningful only when
  // collinear (otherwise it reports the weight of the projection onto the
  // coordinate used to solve for it).
  bool alpha_in_unit = false;
};

/// Tangential condition: `step` lies on the line segment joining `prev` and
/// `w`. Exact cross-product test; `prev` and `w` must be distinct points.
TangentialCheck tangential_check(const ExponentPoint& prev, const ExponentPoint& w,
                                 const ExponentPoint& step);

/// Evaluates every closing condition for a scheme: per-step cellular and
/// transverse margins, per-step collinearity, the inductive chain bound on
/// the transverse margin, the bracketing of 1/p_final, and the closing-step
/// sanity flags. Works on canonical and perturbed schemes alike.
AdmissibilityReport check_scheme(const Scheme& scheme);

/// Builds the canonical scheme for n and checks it.
AdmissibilityReport check_scheme(int n);

}  // namespace lexp
