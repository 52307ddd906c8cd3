#pragma once

// Tribonacci-Lucas numbers S(n+3) = S(n+2) + S(n+1) + S(n), S(0)=3, S(1)=1,
// S(2)=3, and certified facts about the dominant root alpha of
// x^3 - x^2 - x - 1.
//
// The two complex roots are never materialised; everything downstream only
// needs |beta| = |gamma| = alpha^(-1/2), which gives the residual bound
// |S(n) - alpha^n| <= 2 alpha^(-n/2).

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "tlpal/bigint.hpp"
#include "tlpal/certified_real.hpp"

namespace tlpal {

/// Memoised sequence. Concurrent readers are fine; extension of the cache is
/// serialised internally.
class TribLucasSequence {
 public:
  TribLucasSequence();

  BigInt term(std::size_t n);
  std::size_t cached_size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<BigInt> cache_;
};

/// S(n) from a process-wide cache.
BigInt trib_lucas(std::size_t n);

struct DominantRoot {
  CertifiedReal alpha;
  CertifiedReal log_alpha;

  unsigned precision_digits() const { return alpha.precision_digits(); }
};

/// x^3 - x^2 - x - 1 evaluated in ball arithmetic.
CertifiedReal characteristic_polynomial(const CertifiedReal& x);

/// alpha by Newton iteration from 1.839, certified by a sign change of the
/// cubic at the ends of the returned ball. Requires precision_digits >= 30.
DominantRoot dominant_root(unsigned precision_digits);

/// alpha = (1 + w1 + w2)/3 with w1,2 = cbrt(19 +/- 3 sqrt(33)), evaluated in
/// ball arithmetic. Independent cross-check for dominant_root.
CertifiedReal dominant_root_radicals(unsigned precision_digits);

/// |S(n) - alpha^n| <= 2 alpha^(-n/2), n >= 1. Throws PrecisionExhausted when
/// the balls cannot separate the two sides.
bool binet_residual_check(std::size_t n, const DominantRoot& root);

/// alpha^(m-1) <= S(m) < alpha^(m+1), m >= 1.
bool growth_bounds_check(std::size_t m, const DominantRoot& root);

/// Runs the per-index checks for every index in [1, upto], raising the working
/// precision when a single index needs it. Returns the first failing index,
/// or 0 when all hold.
std::size_t first_binet_residual_failure(std::size_t upto,
                                         unsigned initial_digits = kDefaultPrecisionDigits);
std::size_t first_growth_bounds_failure(std::size_t upto,
                                        unsigned initial_digits = kDefaultPrecisionDigits);

}  // namespace tlpal
