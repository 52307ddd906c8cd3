#pragma once

// Heights, the Matveev lower bound (Bugeaud-Mignotte-Siksek form) and the
// three-step derivation of the initial bounds on n and 2l + m.
//
// Bounds are carried as certified coefficients of powers of (1 + log n), the
// same way they are manipulated by hand; only the last step resolves them to
// an integer bound through the Guzman Sanchez-Luca lemma.

#include <cstddef>
#include <vector>

#include "tlpal/bigint.hpp"
#include "tlpal/certified_real.hpp"
#include "tlpal/recurrence.hpp"

namespace tlpal {

/// h(p/q) = log max(|p|, q) after reducing the fraction. q != 0.
CertifiedReal weil_height_rational(const BigInt& p, const BigInt& q, unsigned digits);

enum class HeightOp { sum, product };

/// sum: h1 + h2 + log 2 (bound for h(x +/- y)); product: h1 + h2.
CertifiedReal height_combine(HeightOp op, const CertifiedReal& h1, const CertifiedReal& h2);
/// h(x^s) = |s| h(x).
CertifiedReal height_power(const CertifiedReal& h, long s);

struct LinearFormSpec {
  unsigned t = 1;
  unsigned D = 1;
  CertifiedReal B;
  std::vector<CertifiedReal> A;
};

/// Throws std::invalid_argument unless t, D >= 1, B >= 1, |A| = t, A_j >= 0.16.
void validate(const LinearFormSpec& spec);

/// 1.4 * 30^(t+3) * t^4.5 * D^2 * (1 + log D) * A_1 ... A_t, i.e. everything
/// but the (1 + log B) factor.
CertifiedReal matveev_constant(unsigned t, unsigned D, const std::vector<CertifiedReal>& A);

/// Magnitude of the lower bound for log|Gamma|:
/// matveev_constant(t, D, A) * (1 + log B).
CertifiedReal matveev_lower_bound(const LinearFormSpec& spec);

/// If H > (4 r^2)^r and L / (log L)^r < H then L < 2^r H (log H)^r.
/// Returns ceil(2^r H (log H)^r); throws std::invalid_argument when the
/// hypothesis on H fails.
BigInt gsl_shave(unsigned r, const CertifiedReal& H);

/// (2l + m) log 10 - 3 < n log alpha < (2l + m) log 10 + 1, certified.
bool length_index_relation(const BigInt& two_ell_plus_m, const BigInt& n,
                           const DominantRoot& root);

struct InitialBounds {
  /// log|Gamma1| > -step1_magnitude (1 + log n).
  CertifiedReal step1_magnitude;
  /// l log 10 < ell_bound_coeff (1 + log n).
  CertifiedReal ell_bound_coeff;
  /// A_1 / (1 + log n) in the second application.
  CertifiedReal step2_a1_coeff;
  /// log|Gamma2| > -step2_magnitude (1 + log n)^2.
  CertifiedReal step2_magnitude;
  /// m log 10 < m_bound_coeff (1 + log n)^2.
  CertifiedReal m_bound_coeff;
  /// (2m + l) log 10 < step3_length_coeff (1 + log n)^2.
  CertifiedReal step3_length_coeff;
  CertifiedReal step3_a1_coeff;
  /// log|Gamma3| > -step3_magnitude (1 + log n)^3.
  CertifiedReal step3_magnitude;
  /// n < H (log n)^3 for n > n_low.
  CertifiedReal H;
  /// n < n_bound.
  BigInt n_bound;
  /// 2l + m < two_ell_plus_m_bound.
  BigInt two_ell_plus_m_bound;
  std::size_t n_low = 0;
};

/// Replays the three applications of the Matveev bound for solutions with
/// n > n_low.
InitialBounds derive_initial_bounds(const DominantRoot& root, std::size_t n_low = 500);

}  // namespace tlpal
