#include "lexp/scheme.hpp"

#include <string>

namespace lexp {

namespace {

// Affine combination of prev's pair and the weighted point at index m,
// without the public range checks (the cap probe at m = n+1 needs it too).
SchemeStep combine(int n, const SchemeStep& prev, int m, const Rational& alpha) {
  const ExponentPoint w = weighted_point(n, m);
  const Rational co = Rational(1) - alpha;
  return {m,
          alpha * prev.inv_p + co * w.inv_p,
          alpha * prev.gamma + co * w.gamma,
          alpha,
          StepSource::CellularSaturation};
}

Rational cellular_saturated_inv_p(int m) { return Rational(m - 1, 2L * m); }

}  // namespace

const SchemeStep& Scheme::step(int m) const {
  for (const SchemeStep& s : steps) {
    if (s.m == m) return s;
  }
  throw std::out_of_range("scheme has no step at m=" + std::to_string(m));
}

SchemeStep base_step(int n) {
  if (n < 3) throw std::domain_error("base_step: n must be >= 3");
  return {3, Rational(1, 3), Rational(2 - n, 12), Rational(1), StepSource::Base};
}

Rational interpolation_alpha(int m) {
  if (m < 3) throw std::domain_error("interpolation_alpha: m must be >= 3");
  const long lm = m;
  return Rational(lm * lm - 3 * lm, lm * lm - 2 * lm - 2);
}

SchemeStep interpolated_step(int n, const SchemeStep& prev, int m, const Rational& alpha) {
  if (m != prev.m + 1) throw std::invalid_argument("interpolated_step: m must be prev.m + 1");
  if (m < 4 || m > n + 1) throw std::invalid_argument("interpolated_step: m must be in [4, n+1]");
  if (alpha < Rational(0) || alpha > Rational(1)) {
    throw std::invalid_argument("interpolated_step: alpha must be in [0, 1]");
  }
  return combine(n, prev, m, alpha);
}

SchemeStep next_step(int n, const SchemeStep& prev, int m) {
  SchemeStep step = interpolated_step(n, prev, m, interpolation_alpha(m));
  if (step.inv_p != cellular_saturated_inv_p(m)) {
    throw std::invalid_argument("next_step: prev is not the canonical step at m-1");
  }
  return step;
}

int find_M(int n) {
  if (n < 3) throw std::domain_error("find_M: n must be >= 3");
  SchemeStep prev = base_step(n);
  int M = 3;
  for (int m = 4; m <= n; ++m) {
    const SchemeStep candidate = combine(n, prev, m, interpolation_alpha(m));
    if (candidate.gamma.sign() >= 0) break;
    prev = candidate;
    M = m;
  }
  return M;
}

namespace detail {

ClosingStep close_at(int n, const SchemeStep& prev, const Rational& gamma0) {
  const int m = prev.m + 1;
  if (prev.gamma >= gamma0) throw std::invalid_argument("close_at: prev gamma must lie below the target loss");
  const ExponentPoint w = weighted_point(n, m);
  if (w.gamma <= gamma0) {
    throw ConstructionError("closing at m=" + std::to_string(m) +
                            " requires weighted gamma above the target loss; got " +
                            w.gamma.to_string());
  }
  const Rational alpha = (w.gamma - gamma0) / (w.gamma - prev.gamma);
  const Rational inv_p = alpha * prev.inv_p + (Rational(1) - alpha) * w.inv_p;
  return {alpha, inv_p.reciprocal()};
}

Scheme build_scheme_with_loss(int n, const Rational& gamma0) {
  if (n < 3) throw std::domain_error("build_scheme: n must be >= 3");
  if (gamma0.sign() < 0) throw std::domain_error("build_scheme: loss gamma0 must be >= 0");
  const bool canonical = gamma0.is_zero();

  const SchemeStep base = base_step(n);
  SchemeStep alias = base;
  alias.m = 2;  // recorded alias: p_2 = p_3, gamma_2 = gamma_3

  Scheme scheme;
  scheme.n = n;
  scheme.steps = {alias, base};
  scheme.M = 3;

  SchemeStep prev = base;
  bool capped = true;  // ran through m = n without the sign rule firing
  for (int m = 4; m <= n; ++m) {
    const SchemeStep candidate = combine(n, prev, m, interpolation_alpha(m));
    if (canonical && candidate.gamma.is_zero()) {
      throw ConstructionError("gamma is exactly zero at m=" + std::to_string(m) +
                              " for n=" + std::to_string(n));
    }
    if (!(candidate.gamma < gamma0)) {
      capped = false;
      break;
    }
    scheme.steps.push_back(candidate);
    prev = candidate;
    scheme.M = m;
  }

  if (canonical && capped) {
    // The cap M <= n was reached with every gamma still negative. Probe the
    // recursion one index further: if it would have stayed negative, the cap
    // truncated a live recursion and the bracketing property is void.
    const SchemeStep probe = combine(n, prev, n + 1, interpolation_alpha(n + 1));
    if (probe.gamma.is_zero()) {
      throw ConstructionError("gamma is exactly zero at m=" + std::to_string(n + 1) +
                              " for n=" + std::to_string(n));
    }
    if (probe.gamma.sign() < 0) {
      throw ConstructionError("stopping index capped at n=" + std::to_string(n) +
                              " with the recursion still negative");
    }
  }

  const ClosingStep closing = close_at(n, prev, gamma0);
  scheme.closing_alpha = closing.alpha;
  scheme.p_final = closing.p_final;
  if (!canonical) {
    const Rational floor(2L * (n + 1), n);
    if (scheme.p_final < floor) scheme.p_final = floor;
  }
  return scheme;
}

}  // namespace detail

ClosingStep closing_step(int n, const SchemeStep& step_M) {
  return detail::close_at(n, step_M, Rational(0));
}

Scheme build_scheme(int n) { return detail::build_scheme_with_loss(n, Rational(0)); }

Rational closing_gamma(const Scheme& scheme) {
  const SchemeStep& last = scheme.last_step();
  const ExponentPoint w = weighted_point(scheme.n, scheme.M + 1);
  return scheme.closing_alpha * last.gamma + (Rational(1) - scheme.closing_alpha) * w.gamma;
}

}  // namespace lexp
