#include "tlpal/continued_fraction.hpp"

#include <utility>

#include "tlpal/errors.hpp"

namespace tlpal {

namespace {

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

ContinuedFraction cf_expand(const CertifiedReal& x, std::size_t max_terms) {
  ContinuedFraction cf;
  cf.value_ = x;
  Rational lo = x.lower_bound();
  Rational hi = x.upper_bound();
  BigInt p_prev(1), p_prev2(0), q_prev(0), q_prev2(1);
  cf.stop_ = ContinuedFraction::Stop::max_terms;
  while (cf.quotients_.size() < max_terms) {
    const BigInt a = floor_of(lo);
    if (a != floor_of(hi)) {
      cf.stop_ = ContinuedFraction::Stop::precision;
      break;
    }
    const BigInt p = a * p_prev + p_prev2;
    const BigInt q = a * q_prev + q_prev2;
    cf.convergents_.push_back({cf.quotients_.size(), p, q});
    cf.quotients_.push_back(a);
    p_prev2 = std::exchange(p_prev, p);
    q_prev2 = std::exchange(q_prev, q);

    lo -= a;
    hi -= a;
    if (lo == 0) {
      // Rational endpoint: either the expansion really ends here or the next
      // quotient is unbounded within the ball.
      cf.stop_ = hi == 0 ? ContinuedFraction::Stop::terminated
                         : ContinuedFraction::Stop::precision;
      break;
    }
    // x -> 1/(x - a) reverses the order of the endpoints.
    Rational next_lo = 1 / hi;
    hi = 1 / lo;
    lo = std::move(next_lo);
  }
  return cf;
}

Convergent first_convergent_exceeding(const ContinuedFraction& cf, const BigInt& threshold) {
  for (const Convergent& c : cf.convergents()) {
    if (c.q > threshold) return c;
  }
  if (cf.truncated_by_precision()) {
    throw PrecisionExhausted("continued fraction too short for q > " + threshold.get_str());
  }
  throw NotFound("no convergent with q > " + threshold.get_str() + " among " +
                 std::to_string(cf.size()) + " terms");
}

CertifiedReal nearest_integer_distance(const CertifiedReal& x) {
  const auto n = x.nearest_integer();
  if (!n) throw PrecisionExhausted("nearest integer of " + x.to_string(12));
  const CertifiedReal d = abs(x - CertifiedReal::from_integer(*n, x.precision_digits()));
  if (d.contains_zero() && !d.is_exact_zero()) {
    return CertifiedReal::from_interval(Rational(0), d.upper_bound(), x.precision_digits());
  }
  return d;
}

}  // namespace tlpal
