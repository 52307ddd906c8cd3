#pragma once

// Bound reduction from continued fractions.
//
// Dujella-Petho form of Baker-Davenport: for kappa irrational, a convergent
// p/q of kappa with q > 6M and
//     eps = ||mu q|| - M ||kappa q|| > 0,
// the inequality 0 < |m kappa - n + mu| < A B^(-k) has no solution with
// m <= M and k >= log(A q / eps) / log B.
//
// Legendre: if |kappa - x/y| < 1/(2y^2) then x/y is a convergent, and with
// a(M) the largest partial quotient up to the first q_N > M,
// |kappa - x/y| >= 1/((a(M) + 2) y^2) for 0 < y < M.

#include <cstddef>
#include <optional>
#include <string>

#include "tlpal/bigint.hpp"
#include "tlpal/certified_real.hpp"
#include "tlpal/continued_fraction.hpp"

namespace tlpal {

struct DPInstance {
  CertifiedReal kappa;
  CertifiedReal mu;
  CertifiedReal A;
  CertifiedReal B;
  BigInt M;
};

/// Enough data to re-check a reduction step independently.
struct Certificate {
  std::string method;
  std::optional<std::size_t> convergent_index;
  std::optional<BigInt> q;
  std::optional<CertifiedReal> epsilon;
  std::optional<BigInt> max_partial_quotient;
  /// The real threshold whose strict integer part is the bound.
  std::optional<CertifiedReal> threshold;
  std::size_t convergents_tried = 0;
};

struct ReductionOutcome {
  enum class Kind { bound, failure };

  Kind kind = Kind::failure;
  std::optional<BigInt> bound_value;
  Certificate certificate;
  std::string failure_reason;

  bool is_bound() const { return kind == Kind::bound; }

  static ReductionOutcome bound(BigInt value, Certificate cert);
  static ReductionOutcome failure(std::string reason, Certificate cert);
};

/// Default number of convergents tried after the first q > 6M when eps <= 0.
inline constexpr std::size_t kDefaultConvergentAttempts = 24;

/// Tries convergents from the first with q > 6M until eps is certified
/// positive. mu == 0 (exactly) fails immediately, since then eps < 0 for every
/// q. Returns the bound floor(log(A q / eps) / log B) on the exponent.
ReductionOutcome baker_davenport_reduce(const DPInstance& inst, const ContinuedFraction& cf,
                                        std::size_t max_attempts = kDefaultConvergentAttempts);

/// Bound on the exponent from the Legendre criterion:
/// exponent < log((a(M) + 2) A M) / log B, returned as its strict integer part.
ReductionOutcome legendre_bound(const ContinuedFraction& cf, const BigInt& M,
                                const CertifiedReal& A, const CertifiedReal& B_base);

}  // namespace tlpal
