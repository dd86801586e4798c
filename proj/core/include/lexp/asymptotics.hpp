#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexp/rational.hpp"

namespace lexp {

enum class Target { PFinal, PCmw, PNess };

std::string_view to_string(Target target);
std::optional<Target> target_from_string(std::string_view name);

/// Remainder of the second-order expansion, scaled by n^2:
///   p_final, p_cmw:  (value(n) - 2 - 4/n - 4 ln(n)/n^2) * n^2
///   p_ness:          (value(n) - 2 - 4/n + 8/n^{3/2}) * n^2
/// The value stays an exact rational until the final subtraction; ln(n) and
/// sqrt(n) are evaluated with MPFR (correctly rounded) at `digits` plus ten
/// guard digits. Returns a fixed-point decimal string carrying `digits`
/// significant digits. Requires n >= 3 and digits >= 20.
std::string expansion_remainder(int n, Target target, int digits);

struct RemainderSample {
  int n = 0;
  std::string remainder_times_n2;

  bool operator==(const RemainderSample&) const = default;
};

struct RemainderReport {
  Target target = Target::PFinal;
  std::vector<RemainderSample> samples;  // sorted by n, each n once
  std::string max_abs;
  int precision_digits = 0;

  bool operator==(const RemainderReport&) const = default;
};

/// Remainders over a sweep of n: every integer up to 100, then a logarithmic
/// sample of about twenty points per decade. Requires 3 <= n_lo <= n_hi.
RemainderReport sweep_report(int n_lo, int n_hi, Target target, int digits);

}  // namespace lexp
