#pragma once

#include <stdexcept>
#include <vector>

#include "lexp/catalog.hpp"
#include "lexp/rational.hpp"

namespace lexp {

/// Raised when a scheme cannot be closed under the construction's rules:
/// the weighted gamma at the closing index is not above the target loss, the
/// stopping index hits the cap n with the recursion still running, or an
/// exactly-zero gamma shows up where the rules demand a strict sign.
struct ConstructionError : std::runtime_error {
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

enum class StepSource {
  Base,                // m = 2, 3: the bilinear ingredient
  CellularSaturation,  // interpolation step (canonically saturating p_m = 2m/(m-1))
  Closing,             // synthetic step at the closing index, used in reports
};

/// One stage of the induction: the exponent pair chosen at dimension m along
/// with the interpolation weight that produced it.
struct SchemeStep {
  int m = 0;
  Rational inv_p;  // 1/p_m
  Rational gamma;  // gamma_m
  Rational alpha;  // weight on the previous step's pair; 1 for base steps
  StepSource source = StepSource::Base;

  ExponentPoint point() const { return {inv_p, gamma}; }

  bool operator==(const SchemeStep&) const = default;
};

/// The full induction record for ambient dimension n: base and interpolation
/// steps for m = 2..M (m = 2 is the recorded alias of m = 3), the stopping
/// index M, and the closing interpolation that lands the final exponent.
struct Scheme {
  int n = 0;
  std::vector<SchemeStep> steps;
  int M = 0;
  Rational closing_alpha;  // alpha_{M+1}
  Rational p_final;        // p_{n+1} = ... = p_{M+1}

  const SchemeStep& step(int m) const;
  const SchemeStep& last_step() const { return steps.back(); }

  bool operator==(const Scheme&) const = default;
};

/// Base case of the recursion at m = 3: (1/3, (2-n)/12), which is the m = 2
/// bilinear point. Requires n >= 3 (at n = 2 the gamma would be 0 and the
/// recursion could not start strictly negative).
SchemeStep base_step(int n);

/// Interpolation weight alpha_m = (m^2-3m)/(m^2-2m-2) for m >= 3, chosen so
/// that alpha_m/p_{m-1} + (1-alpha_m)/p_{w,m} = 1/p_m with p_k = 2k/(k-1).
Rational interpolation_alpha(int m);

/// Point on the segment joining prev's pair and weighted_point(n, m), at
/// weight `alpha` on prev. Requires m = prev.m + 1, 4 <= m <= n+1, and
/// alpha in [0, 1]. This is the generic interpolation step; the canonical
/// recursion uses alpha = interpolation_alpha(m), and m = n+1 only arises
/// when probing past the stopping cap.
SchemeStep interpolated_step(int n, const SchemeStep& prev, int m, const Rational& alpha);

/// Canonical recursion step: interpolates with interpolation_alpha(m), which
/// lands 1/p_m = (m-1)/(2m) exactly (cellular saturation). Requires that
/// prev is the canonical step at m-1.
SchemeStep next_step(int n, const SchemeStep& prev, int m);

/// Largest M in [3, n] such that gamma_m < 0 strictly for every m in [3, M].
/// Always >= 3 for n >= 3.
int find_M(int n);

struct ClosingStep {
  Rational alpha;    // alpha_{M+1}, strictly inside (0, 1)
  Rational p_final;  // the closed exponent

  bool operator==(const ClosingStep&) const = default;
};

/// Closing interpolation at index step_M.m + 1: picks the weight for which
/// the interpolated gamma is exactly zero,
///   alpha = gamma_w / (gamma_w - gamma_M),
/// and returns the exponent at that point. Requires step_M.gamma < 0; throws
/// ConstructionError if the weighted gamma at the closing index is not
/// strictly positive.
ClosingStep closing_step(int n, const SchemeStep& step_M);

/// Runs the whole pipeline: base step, canonical interpolation steps up to
/// the stopping index, then the closing step. Deterministic; throws
/// ConstructionError on the defensive conditions documented above.
Scheme build_scheme(int n);

/// Gamma value of the closing point, reconstructed from the stored closing
/// weight: closing_alpha * gamma_M + (1 - closing_alpha) * gamma_{w,M+1}.
/// Exactly 0/1 for canonical schemes.
Rational closing_gamma(const Scheme& scheme);

namespace detail {

/// Shared builder: membership rule gamma_m < gamma0, closing targets gamma
/// exactly gamma0, and the result is floored at p = 2(n+1)/n when gamma0 > 0.
/// gamma0 = 0 is the canonical pipeline.
Scheme build_scheme_with_loss(int n, const Rational& gamma0);

/// Closing interpolation from `prev` targeting gamma exactly gamma0.
ClosingStep close_at(int n, const SchemeStep& prev, const Rational& gamma0);

}  // namespace detail

}  // namespace lexp
