#include "lexp/optimizer.hpp"

#include <future>
#include <string>
#include <utility>
#include <vector>

namespace lexp {

namespace {

// Shrinks [lo, hi] by the affine constraint a * alpha + b >= 0.
// Returns false once the interval is empty.
bool clip(Rational& lo, Rational& hi, const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.sign() >= 0;
  const Rational root = -b / a;
  if (a.sign() > 0) {
    if (root > lo) lo = root;
  } else {
    if (root < hi) hi = root;
  }
  return lo <= hi;
}

SchemeStep step_at_alpha(int n, const SchemeStep& prev, int m, const Rational& alpha) {
  const ExponentPoint w = weighted_point(n, m);
  const Rational co = Rational(1) - alpha;
  return {m, alpha * prev.inv_p + co * w.inv_p, alpha * prev.gamma + co * w.gamma, alpha,
          StepSource::CellularSaturation};
}

Scheme assemble(int n, std::vector<SchemeStep> steps, const ClosingStep& closing) {
  Scheme scheme;
  scheme.n = n;
  scheme.M = steps.back().m;
  scheme.steps = std::move(steps);
  scheme.closing_alpha = closing.alpha;
  scheme.p_final = closing.p_final;
  return scheme;
}

// m = 2 alias plus the m = 3 base step.
std::vector<SchemeStep> stem(int n) {
  const SchemeStep base = base_step(n);
  SchemeStep alias = base;
  alias.m = 2;
  return {alias, base};
}

void close_branch(int n, const std::vector<SchemeStep>& steps,
                  const std::map<int, Rational>& chosen, std::vector<PerturbedScheme>& out) {
  Scheme scheme = assemble(n, steps, detail::close_at(n, steps.back(), Rational(0)));
  const bool ok = check_scheme(scheme).overall;
  out.push_back({n, chosen, std::move(scheme), ok});
}

void explore_grid(int n, int resolution, const std::vector<SchemeStep>& steps,
                  std::map<int, Rational>& chosen, std::vector<PerturbedScheme>& out);

// Takes one chosen weight at index m: extends the recursion while gamma
// stays strictly negative, otherwise the weight is exactly the closing
// interpolation from the previous step and the branch terminates.
void take_branch(int n, int resolution, const std::vector<SchemeStep>& steps, int m,
                 const Rational& alpha, std::map<int, Rational>& chosen,
                 std::vector<PerturbedScheme>& out) {
  const SchemeStep candidate = step_at_alpha(n, steps.back(), m, alpha);
  if (candidate.gamma.sign() < 0) {
    std::vector<SchemeStep> next = steps;
    next.push_back(candidate);
    chosen.emplace(m, alpha);
    explore_grid(n, resolution, next, chosen, out);
    chosen.erase(m);
  } else {
    close_branch(n, steps, chosen, out);
  }
}

void explore_grid(int n, int resolution, const std::vector<SchemeStep>& steps,
                  std::map<int, Rational>& chosen, std::vector<PerturbedScheme>& out) {
  const SchemeStep& prev = steps.back();
  const int m = prev.m + 1;
  if (m > n) {
    close_branch(n, steps, chosen, out);
    return;
  }
  const auto interval = admissible_alpha_interval(n, m, prev);
  if (!interval) {
    close_branch(n, steps, chosen, out);
    return;
  }
  const Rational width = interval->hi - interval->lo;
  const int count = width.is_zero() ? 1 : resolution;
  for (int i = 0; i < count; ++i) {
    const Rational alpha = interval->lo + width * Rational(i, resolution - 1);
    take_branch(n, resolution, steps, m, alpha, chosen, out);
  }
}

bool better(const PerturbedScheme& a, const PerturbedScheme& b) {
  if (a.scheme.p_final != b.scheme.p_final) return a.scheme.p_final < b.scheme.p_final;
  return a.overrides < b.overrides;
}

}  // namespace

std::optional<AlphaInterval> admissible_alpha_interval(int n, int m, const SchemeStep& prev) {
  if (m != prev.m + 1) {
    throw std::invalid_argument("admissible_alpha_interval: m must be prev.m + 1");
  }
  if (m < 4 || m > n + 1) {
    throw std::invalid_argument("admissible_alpha_interval: m must be in [4, n+1]");
  }
  const ExponentPoint w = weighted_point(n, m);

  // point(alpha) = w + alpha * (prev - w), coordinatewise.
  const Rational dx = prev.inv_p - w.inv_p;
  const Rational dg = prev.gamma - w.gamma;

  Rational lo(0), hi(1);
  // Cellular: (m-1)/(2m) - inv_p(alpha) >= 0.
  if (!clip(lo, hi, -dx, Rational(m - 1, 2L * m) - w.inv_p)) return std::nullopt;
  // Transverse: (n+1-m)(1/2 - inv_p(alpha)) + 2 gamma(alpha) >= 0.
  const Rational k(n + 1 - m);
  if (!clip(lo, hi, Rational(2) * dg - k * dx,
            k * (Rational(1, 2) - w.inv_p) + Rational(2) * w.gamma)) {
    return std::nullopt;
  }
  // Sign: gamma(alpha) <= 0.
  if (!clip(lo, hi, -dg, -w.gamma)) return std::nullopt;
  return AlphaInterval{lo, hi};
}

PerturbedScheme perturbed_scheme(int n, const std::map<int, Rational>& overrides) {
  if (n < 3) throw std::domain_error("perturbed_scheme: n must be >= 3");
  const int M_canonical = find_M(n);
  for (const auto& [m, alpha] : overrides) {
    if (m < 4 || m > M_canonical) {
      throw std::invalid_argument("perturbed_scheme: override index " + std::to_string(m) +
                                  " outside [4, M=" + std::to_string(M_canonical) + "]");
    }
    if (alpha < Rational(0) || alpha > Rational(1)) {
      throw std::invalid_argument("perturbed_scheme: override alpha must be in [0, 1]");
    }
  }

  std::vector<SchemeStep> steps = stem(n);
  bool overrides_admissible = true;
  for (int m = 4; m <= n; ++m) {
    const SchemeStep& prev = steps.back();
    const auto it = overrides.find(m);
    const Rational alpha = it != overrides.end() ? it->second : interpolation_alpha(m);
    if (it != overrides.end()) {
      const auto interval = admissible_alpha_interval(n, m, prev);
      overrides_admissible =
          overrides_admissible && interval.has_value() && interval->contains(alpha);
    }
    const SchemeStep candidate = step_at_alpha(n, prev, m, alpha);
    if (candidate.gamma.sign() >= 0) break;  // pipeline closes at this index
    steps.push_back(candidate);
  }

  const ClosingStep closing = detail::close_at(n, steps.back(), Rational(0));
  Scheme scheme = assemble(n, std::move(steps), closing);
  const bool ok = overrides_admissible && check_scheme(scheme).overall;
  return {n, overrides, std::move(scheme), ok};
}

GridSearchResult grid_search(int n, int resolution) {
  if (n < 3) throw std::domain_error("grid_search: n must be >= 3");
  if (resolution < 2) throw std::invalid_argument("grid_search: resolution must be >= 2");

  const Scheme canonical = build_scheme(n);
  const std::vector<SchemeStep> root = stem(n);

  std::optional<AlphaInterval> interval;
  if (4 <= n) interval = admissible_alpha_interval(n, 4, root.back());

  std::vector<PerturbedScheme> all;
  if (!interval) {
    std::map<int, Rational> chosen;
    explore_grid(n, resolution, root, chosen, all);
  } else {
    // Top-level branches are independent; run them concurrently and fold the
    // buckets in branch order so the result is schedule-independent.
    const Rational width = interval->hi - interval->lo;
    const int count = width.is_zero() ? 1 : resolution;
    std::vector<std::future<std::vector<PerturbedScheme>>> futures;
    futures.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const Rational alpha = interval->lo + width * Rational(i, resolution - 1);
      futures.push_back(std::async(std::launch::async, [n, resolution, &root, alpha] {
        std::vector<PerturbedScheme> out;
        std::map<int, Rational> chosen;
        take_branch(n, resolution, root, 4, alpha, chosen, out);
        return out;
      }));
    }
    for (auto& future : futures) {
      for (PerturbedScheme& candidate : future.get()) all.push_back(std::move(candidate));
    }
  }

  GridSearchResult result;
  result.best = all.front();
  for (const PerturbedScheme& candidate : all) {
    if (better(candidate, result.best)) result.best = candidate;
  }
  result.canonical_is_minimal = canonical.p_final <= result.best.scheme.p_final;
  return result;
}

Scheme general_scheme(int n, const Rational& gamma0) {
  return detail::build_scheme_with_loss(n, gamma0);
}

}  // namespace lexp
