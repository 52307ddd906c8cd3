#include "tlpal/recurrence.hpp"

#include <mpfr.h>

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tlpal {

TribLucasSequence::TribLucasSequence() : cache_{BigInt(3), BigInt(1), BigInt(3)} {}

BigInt TribLucasSequence::term(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < cache_.size()) return cache_[n];
  }
  std::unique_lock lock(mutex_);
  cache_.reserve(n + 1);
  while (cache_.size() <= n) {
    const std::size_t k = cache_.size();
    cache_.push_back(cache_[k - 1] + cache_[k - 2] + cache_[k - 3]);
  }
  return cache_[n];
}

std::size_t TribLucasSequence::cached_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

BigInt trib_lucas(std::size_t n) {
  static TribLucasSequence sequence;
  return sequence.term(n);
}

CertifiedReal characteristic_polynomial(const CertifiedReal& x) {
  // ((x - 1) x - 1) x - 1
  return ((x - 1) * x - 1) * x - 1;
}

namespace {

Rational cubic_at(const Rational& x) { return ((x - 1) * x - 1) * x - 1; }

Rational exact_value(mpfr_srcptr x) {
  BigInt m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  Rational r(m);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

}  // namespace

DominantRoot dominant_root(unsigned precision_digits) {
  if (precision_digits < 30) {
    throw std::invalid_argument("dominant_root needs at least 30 digits");
  }
  const mpfr_prec_t bits = CertifiedReal(precision_digits).precision_bits() + 32;
  mpfr_t x, f, df, step;
  mpfr_inits2(bits, x, f, df, step, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_str(x, "1.839", 10, MPFR_RNDN);
  // Quadratic convergence: 1.839 is good to ~3 digits, so log2(bits) + 4 steps.
  for (int i = 0; i < 64; ++i) {
    mpfr_sub_ui(f, x, 1, MPFR_RNDN);
    mpfr_mul(f, f, x, MPFR_RNDN);
    mpfr_sub_ui(f, f, 1, MPFR_RNDN);
    mpfr_mul(f, f, x, MPFR_RNDN);
    mpfr_sub_ui(f, f, 1, MPFR_RNDN);
    // f' = 3x^2 - 2x - 1
    mpfr_mul_ui(df, x, 3, MPFR_RNDN);
    mpfr_sub_ui(df, df, 2, MPFR_RNDN);
    mpfr_mul(df, df, x, MPFR_RNDN);
    mpfr_sub_ui(df, df, 1, MPFR_RNDN);
    mpfr_div(step, f, df, MPFR_RNDN);
    mpfr_sub(x, x, step, MPFR_RNDN);
    if (mpfr_zero_p(step) || mpfr_get_exp(step) < -bits + 4) break;
  }
  const Rational centre = exact_value(x);
  mpfr_clears(x, f, df, step, static_cast<mpfr_ptr>(nullptr));

  // The cubic is increasing on (1, 2): a sign change brackets the unique root.
  Rational delta(1);
  mpz_mul_2exp(delta.get_den_mpz_t(), delta.get_den_mpz_t(),
               static_cast<mp_bitcnt_t>(bits - 8));
  const Rational lo = centre - delta;
  const Rational hi = centre + delta;
  if (!(cubic_at(lo) < 0 && cubic_at(hi) > 0)) {
    throw PrecisionExhausted("Newton iterate for alpha not bracketed");
  }
  DominantRoot root{CertifiedReal::from_interval(lo, hi, precision_digits), CertifiedReal()};
  root.log_alpha = log(root.alpha);
  return root;
}

CertifiedReal dominant_root_radicals(unsigned precision_digits) {
  const auto c = [&](long v) { return CertifiedReal::from_int(v, precision_digits); };
  const CertifiedReal s = sqrt(c(33));
  const CertifiedReal w1 = cbrt(c(19) + 3 * s);
  const CertifiedReal w2 = cbrt(c(19) - 3 * s);
  return (c(1) + w1 + w2) / 3;
}

bool binet_residual_check(std::size_t n, const DominantRoot& root) {
  if (n < 1) throw std::invalid_argument("binet_residual_check needs n >= 1");
  const unsigned digits = root.precision_digits();
  const CertifiedReal residual =
      abs(CertifiedReal::from_integer(trib_lucas(n), digits) - pow(root.alpha, n));
  const CertifiedReal allowance =
      2 * exp(root.log_alpha * CertifiedReal::from_rational(Rational(-long(n), 2), digits));
  if (certainly_less_equal(residual, allowance)) return true;
  if (certainly_less(allowance, residual)) return false;
  throw PrecisionExhausted("binet residual at n = " + std::to_string(n));
}

bool growth_bounds_check(std::size_t m, const DominantRoot& root) {
  if (m < 1) throw std::invalid_argument("growth_bounds_check needs m >= 1");
  const CertifiedReal s = CertifiedReal::from_integer(trib_lucas(m), root.precision_digits());
  const CertifiedReal below = pow(root.alpha, m - 1);
  const CertifiedReal above = pow(root.alpha, m + 1);
  bool lower_ok;
  if (certainly_less_equal(below, s)) {
    lower_ok = true;
  } else if (certainly_less(s, below)) {
    lower_ok = false;
  } else {
    throw PrecisionExhausted("growth lower bound at m = " + std::to_string(m));
  }
  return lower_ok && decide_less(s, above, "growth upper bound");
}

namespace {

std::size_t first_failure(std::size_t upto, unsigned initial_digits,
                          const std::function<bool(std::size_t, const DominantRoot&)>& check) {
  std::map<unsigned, DominantRoot> roots;
  const auto root_at = [&](unsigned digits) -> const DominantRoot& {
    auto it = roots.find(digits);
    if (it == roots.end()) it = roots.emplace(digits, dominant_root(digits)).first;
    return it->second;
  };
  unsigned digits = initial_digits;
  for (std::size_t n = 1; n <= upto; ++n) {
    const bool ok = with_precision_retry(digits, kMaxPrecisionDigits, [&](unsigned d) {
      const bool r = check(n, root_at(d));
      digits = d;  // later indices need at least as much
      return r;
    });
    if (!ok) return n;
  }
  return 0;
}

}  // namespace

std::size_t first_binet_residual_failure(std::size_t upto, unsigned initial_digits) {
  return first_failure(upto, initial_digits, binet_residual_check);
}

std::size_t first_growth_bounds_failure(std::size_t upto, unsigned initial_digits) {
  return first_failure(upto, initial_digits, growth_bounds_check);
}

}  // namespace tlpal
