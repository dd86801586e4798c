#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lexp {

/// Raised when a rational is constructed with denominator zero.
struct ZeroDenominatorError : std::domain_error {
  ZeroDenominatorError() : std::domain_error("rational: zero denominator") {}
};

/// Raised on division by an exact zero.
struct DivisionByZeroError : std::domain_error {
  DivisionByZeroError() : std::domain_error("rational: division by zero") {}
};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator (zero is 0/1). Backed by GMP; no floating point is involved
/// in construction, arithmetic, or comparison, so equality is structural.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int value) : q_(value) {}
  Rational(long value) : q_(static_cast<signed long>(value)) {}

  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "num/den" or a bare integer "num". Whitespace is not accepted.
  static Rational from_string(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// -1, 0 or +1.
  int sign() const { return sgn(q_); }

  Rational reciprocal() const;

  /// Serializes as "num/den", reduced, denominator positive ("0/1" for zero).
  std::string to_string() const;

  /// Correctly rounded decimal expansion with exactly `digits` fractional
  /// digits, using round-half-even on the scaled value. `digits` must be
  /// at least 1.
  std::string to_decimal(int digits) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    return Rational(a.q_ / b.q_);
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// Access to the underlying GMP value (used by the asymptotics module to
  /// seed MPFR without a decimal detour).
  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;  // canonical: reduced, den > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact harmonic sum 1/lo + 1/(lo+1) + ... + 1/hi. Requires 1 <= lo <= hi;
/// an empty range is rejected rather than treated as zero.
Rational harmonic_sum(long lo, long hi);

}  // namespace lexp
