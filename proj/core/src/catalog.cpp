#include "lexp/catalog.hpp"

namespace lexp {

ExponentPoint weighted_point(int n, int m) {
  if (n < 2) throw std::domain_error("weighted_point: n must be >= 2");
  if (m < 3 || m > n + 1) throw std::domain_error("weighted_point: m must be in [3, n+1]");
  const long pyramid = static_cast<long>(m) * (m - 1) * (m - 2);
  const Rational inv_p = Rational(1, 2) - Rational(1, pyramid);
  const Rational gamma = Rational(m - 1, 2L * m) - Rational(n + m - 1, 2 * pyramid);
  return {inv_p, gamma};
}

ExponentPoint bilinear_point(int n, int m) {
  if (n < 1) throw std::domain_error("bilinear_point: n must be >= 1");
  if (m < 2 || m > n + 1) throw std::domain_error("bilinear_point: m must be in [2, n+1]");
  return {Rational(m, 2L * (m + 1)), Rational(-(n + 2 - 2L * m), 4L * (m + 1))};
}

Rational p_cmw(int n) {
  if (n < 2) throw std::domain_error("p_cmw: n must be >= 2");
  return Rational(2) + Rational(4) / (Rational(n + 1) + harmonic_sum(2, n));
}

PnessResult p_ness(int n) {
  if (n < 1) throw std::domain_error("p_ness: n must be >= 1");
  PnessResult best{Rational(0), 0};
  for (int m = 1; m <= n; ++m) {
    const Rational denom = Rational(n - 1 + m) + Rational(n, m);
    const Rational value = Rational(2) + Rational(4) / denom;
    if (best.argmax_m == 0 || value > best.value) best = {value, m};
  }
  return best;
}

}  // namespace lexp
