#pragma once

#include <cstddef>
#include <vector>

#include "tlpal/bigint.hpp"
#include "tlpal/certified_real.hpp"

namespace tlpal {

struct Convergent {
  std::size_t index = 0;
  BigInt p;
  BigInt q;
};

/// Partial quotients and convergents of a certified real. Every stored
/// quotient is valid for every point of the input ball.
class ContinuedFraction {
 public:
  enum class Stop { max_terms, precision, terminated };

  const CertifiedReal& value() const { return value_; }
  const std::vector<BigInt>& quotients() const { return quotients_; }
  const std::vector<Convergent>& convergents() const { return convergents_; }
  std::size_t size() const { return quotients_.size(); }
  Stop stop_reason() const { return stop_; }
  /// True when the expansion ended because the ball straddled a quotient
  /// boundary; more digits would give more terms.
  bool truncated_by_precision() const { return stop_ == Stop::precision; }

 private:
  friend ContinuedFraction cf_expand(const CertifiedReal& x, std::size_t max_terms);

  CertifiedReal value_;
  std::vector<BigInt> quotients_;
  std::vector<Convergent> convergents_;
  Stop stop_ = Stop::max_terms;
};

/// Expands the exact rational endpoints of the ball in lockstep and keeps each
/// quotient on which they agree.
ContinuedFraction cf_expand(const CertifiedReal& x, std::size_t max_terms);

/// Smallest-index convergent with q > threshold. Throws PrecisionExhausted if
/// the expansion was cut short by precision, NotFound otherwise.
Convergent first_convergent_exceeding(const ContinuedFraction& cf, const BigInt& threshold);

/// Distance to the nearest integer, in [0, 1/2]. Throws PrecisionExhausted if
/// the ball reaches a half-integer.
CertifiedReal nearest_integer_distance(const CertifiedReal& x);

}  // namespace tlpal
