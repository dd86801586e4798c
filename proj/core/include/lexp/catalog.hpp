#pragma once

#include "lexp/rational.hpp"

namespace lexp {

/// A point in the interpolation plane: the reciprocal Lebesgue exponent 1/p
/// paired with the power of R carried by the estimate. Interpolating two
/// estimates is an affine combination of their points.
struct ExponentPoint {
  Rational inv_p;
  Rational gamma;

  bool operator==(const ExponentPoint&) const = default;
};

/// Exponent pair of the linear weighted restriction estimate for data tangent
/// to an (m-1)-dimensional variety in R^{n+1}:
///   1/p = 1/2 - 1/(m(m-1)(m-2))
///   gamma = (m-1)/(2m) - (n+m-1)/(2m(m-1)(m-2))
/// Requires n >= 2 and 3 <= m <= n+1. The gamma value is returned as the
/// formula gives it; it is negative for m = 3 (and for m = 4 once n >= 15),
/// and positivity is only required, and checked, where a scheme closes.
ExponentPoint weighted_point(int n, int m);

/// Exponent pair of the bilinear weighted restriction estimate:
///   p = 2(m+1)/m,  gamma = -(n+2-2m)/(4(m+1))
/// Requires n >= 1 and 2 <= m <= n+1. Its m = 2 instance is the base case of
/// the induction: bilinear_point(n, 2) == weighted_point(n, 3) exactly.
ExponentPoint bilinear_point(int n, int m);

/// Previous best sufficient exponent, 2 + 4/(n + 1 + 1/2 + ... + 1/n).
/// Requires n >= 2 (the harmonic tail is empty for n = 1).
Rational p_cmw(int n);

struct PnessResult {
  Rational value;
  int argmax_m;  // smallest maximizing m

  bool operator==(const PnessResult&) const = default;
};

/// Best known necessary exponent, max over integer m in [1, n] of
/// 2 + 4/(n-1+m+n/m), with ties resolved to the smallest m. Requires n >= 1.
PnessResult p_ness(int n);

}  // namespace lexp
