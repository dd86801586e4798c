#pragma once

#include <map>
#include <optional>

#include "lexp/admissibility.hpp"
#include "lexp/scheme.hpp"

namespace lexp {

/// Closed interval of interpolation weights; may degenerate to a point.
struct AlphaInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& alpha) const { return lo <= alpha && alpha <= hi; }
  bool operator==(const AlphaInterval&) const = default;
};

/// Exact set of weights alpha in [0, 1] for which the point interpolated
/// between prev's pair and weighted_point(n, m) satisfies the cellular
/// condition, the transverse condition, and gamma <= 0. The three
/// constraints are affine in alpha, so the set is a closed interval (or
/// empty). Requires m = prev.m + 1 with 4 <= m <= n+1.
std::optional<AlphaInterval> admissible_alpha_interval(int n, int m, const SchemeStep& prev);

/// A scheme rebuilt with per-step weight overrides. The recursion, the
/// stopping rule, and the closing rule are the canonical ones; an override
/// that drives gamma to zero or above simply makes the pipeline close at
/// that index. `admissible` records whether every consumed override lay in
/// its admissible interval and the resulting scheme passes check_scheme.
struct PerturbedScheme {
  int n = 0;
  std::map<int, Rational> overrides;
  Scheme scheme;
  bool admissible = false;

  bool operator==(const PerturbedScheme&) const = default;
};

/// Reruns the recursion with the given overrides (keyed by m in
/// [4, find_M(n)], values in [0, 1]; anything else is a usage error).
PerturbedScheme perturbed_scheme(int n, const std::map<int, Rational>& overrides);

struct GridSearchResult {
  PerturbedScheme best;  // minimal p_final over the grid; ties broken by
                         // lexicographically smallest override map
  bool canonical_is_minimal = false;
};

/// Exhaustively enumerates weight overrides on a uniform rational grid of
/// `resolution` points (endpoints included) inside each admissible interval,
/// exploring every continuation the stopping rule allows. Exact arithmetic
/// throughout; branches are evaluated concurrently and reduced
/// deterministically. Requires resolution >= 2.
GridSearchResult grid_search(int n, int resolution);

/// Generalized scheme with allowed loss gamma0 >= 0: the stopping rule keeps
/// steps while gamma_m < gamma0 and the closing interpolation targets gamma
/// exactly gamma0. The result never reports an exponent below 2(n+1)/n, the
/// smallest the reduction to the maximal estimate can use. gamma0 = 0
/// reproduces build_scheme(n) field for field.
Scheme general_scheme(int n, const Rational& gamma0);

}  // namespace lexp
