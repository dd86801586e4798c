#include "lexp/asymptotics.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "lexp/catalog.hpp"
#include "lexp/scheme.hpp"

namespace lexp {

namespace {

mpfr_prec_t prec_for(int digits) {
  // digits + 10 guard digits, in bits (log2 10 < 3.322).
  return static_cast<mpfr_prec_t>((digits + 10) * 3.322) + 16;
}

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~Real() { mpfr_clear(value_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

// (value(n) - 2 - 4/n) * n^2, exact.
Rational exact_part(int n, Target target) {
  Rational value;
  switch (target) {
    case Target::PFinal: value = build_scheme(n).p_final; break;
    case Target::PCmw: value = p_cmw(n); break;
    case Target::PNess: value = p_ness(n).value; break;
  }
  return (value - Rational(2) - Rational(4, n)) * Rational(static_cast<long>(n) * n);
}

void remainder_value(int n, Target target, Real& out, Real& scratch) {
  mpfr_set_q(out.get(), exact_part(n, target).raw().get_mpq_t(), MPFR_RNDN);
  const auto un = static_cast<unsigned long>(n);
  if (target == Target::PNess) {
    // + 8/n^{3/2} * n^2 = + 8 sqrt(n)
    mpfr_sqrt_ui(scratch.get(), un, MPFR_RNDN);
    mpfr_mul_ui(scratch.get(), scratch.get(), 8, MPFR_RNDN);
    mpfr_add(out.get(), out.get(), scratch.get(), MPFR_RNDN);
  } else {
    // - 4 ln(n)/n^2 * n^2 = - 4 ln(n)
    mpfr_log_ui(scratch.get(), un, MPFR_RNDN);
    mpfr_mul_ui(scratch.get(), scratch.get(), 4, MPFR_RNDN);
    mpfr_sub(out.get(), out.get(), scratch.get(), MPFR_RNDN);
  }
}

// Fixed-point rendering with `digits` significant digits.
std::string to_fixed(mpfr_srcptr x, int digits) {
  if (mpfr_zero_p(x)) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), x, MPFR_RNDN);
  std::string mantissa(raw);
  mpfr_free_str(raw);

  const bool negative = !mantissa.empty() && mantissa.front() == '-';
  const std::string body = negative ? mantissa.substr(1) : mantissa;

  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + body;
  } else if (static_cast<std::size_t>(exp) >= body.size()) {
    out = body + std::string(static_cast<std::size_t>(exp) - body.size(), '0');
  } else {
    out = body.substr(0, static_cast<std::size_t>(exp)) + "." +
          body.substr(static_cast<std::size_t>(exp));
  }
  return negative ? "-" + out : out;
}

void validate(int n, int digits) {
  if (n < 3) throw std::domain_error("expansion_remainder: n must be >= 3");
  if (digits < 20) throw std::domain_error("expansion_remainder: digits must be >= 20");
}

std::vector<int> sample_points(int n_lo, int n_hi) {
  std::set<int> ns{n_lo, n_hi};
  for (int n = n_lo; n <= std::min(n_hi, 100); ++n) ns.insert(n);
  for (int j = 41;; ++j) {  // 10^(41/20) is the first grid point above 100
    const long v = std::lround(std::pow(10.0, j / 20.0));
    if (v > n_hi) break;
    if (v > 100 && v >= n_lo) ns.insert(static_cast<int>(v));
  }
  return {ns.begin(), ns.end()};
}

}  // namespace

std::string_view to_string(Target target) {
  switch (target) {
    case Target::PFinal: return "p_final";
    case Target::PCmw: return "p_cmw";
    case Target::PNess: return "p_ness";
  }
  throw std::invalid_argument("unknown asymptotics target");
}

std::optional<Target> target_from_string(std::string_view name) {
  if (name == "p_final") return Target::PFinal;
  if (name == "p_cmw") return Target::PCmw;
  if (name == "p_ness") return Target::PNess;
  return std::nullopt;
}

std::string expansion_remainder(int n, Target target, int digits) {
  validate(n, digits);
  const mpfr_prec_t prec = prec_for(digits);
  Real value(prec), scratch(prec);
  remainder_value(n, target, value, scratch);
  return to_fixed(value.get(), digits);
}

RemainderReport sweep_report(int n_lo, int n_hi, Target target, int digits) {
  if (n_lo > n_hi) throw std::domain_error("sweep_report: n_lo must be <= n_hi");
  validate(n_lo, digits);

  const mpfr_prec_t prec = prec_for(digits);
  Real value(prec), scratch(prec), max_abs(prec);
  mpfr_set_zero(max_abs.get(), 1);

  RemainderReport report;
  report.target = target;
  report.precision_digits = digits;
  for (const int n : sample_points(n_lo, n_hi)) {
    remainder_value(n, target, value, scratch);
    report.samples.push_back({n, to_fixed(value.get(), digits)});
    if (mpfr_cmpabs(value.get(), max_abs.get()) > 0) {
      mpfr_abs(max_abs.get(), value.get(), MPFR_RNDN);
    }
  }
  report.max_abs = to_fixed(max_abs.get(), digits);
  return report;
}

}  // namespace lexp
