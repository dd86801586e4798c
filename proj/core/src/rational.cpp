#include "lexp/rational.hpp"

#include <ostream>
#include <utility>

namespace lexp {

namespace {

mpq_class canonical(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ZeroDenominatorError();
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(canonical(num, den)) {}

Rational Rational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(text)), mpz_class(1));
    }
    mpz_class num{std::string(text.substr(0, slash))};
    mpz_class den{std::string(text.substr(slash + 1))};
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
  }
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZeroError();
  return Rational(den(), num());
}

std::string Rational::to_string() const {
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) throw std::domain_error("to_decimal: digits must be >= 1");

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  const bool negative = sign() < 0;
  mpz_class scaled = ::abs(num()) * scale;
  mpz_class quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den().get_mpz_t());

  // Round half to even on the discarded remainder.
  const mpz_class twice = 2 * rem;
  const int c = cmp(twice, den());
  if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;

  const mpz_class int_part = quot / scale;
  const mpz_class frac_part = quot % scale;
  std::string frac = frac_part.get_str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');

  std::string out;
  if (negative && quot != 0) out += '-';
  out += int_part.get_str();
  out += '.';
  out += frac;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational harmonic_sum(long lo, long hi) {
  if (lo < 1) throw std::domain_error("harmonic_sum: lo must be >= 1");
  if (lo > hi) throw std::domain_error("harmonic_sum: empty range");
  Rational sum;
  for (long k = lo; k <= hi; ++k) sum += Rational(1, k);
  return sum;
}

}  // namespace lexp
