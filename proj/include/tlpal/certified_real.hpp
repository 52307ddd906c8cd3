#pragma once

// Midpoint-radius ("ball") reals on top of MPFR.
//
// A CertifiedReal stands for every real in [mid - rad, mid + rad]. Each
// operation rounds the midpoint to nearest and pushes every rounding and
// propagation error into the radius with upward rounding, so the true value
// of any expression built from exact inputs stays inside the result ball.
//
// After every operation the radius must satisfy
//     rad <= 10^(-P/2) * max(1, |mid|)
// where P is the working precision in decimal digits; otherwise the
// operation throws PrecisionExhausted and the caller is expected to retry
// with more digits (see with_precision_retry).

#include <mpfr.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "tlpal/bigint.hpp"
#include "tlpal/errors.hpp"

namespace tlpal {

inline constexpr unsigned kDefaultPrecisionDigits = 250;
inline constexpr unsigned kMaxPrecisionDigits = 2000;

class CertifiedReal {
 public:
  /// Exact zero at the default precision.
  CertifiedReal();
  explicit CertifiedReal(unsigned precision_digits);
  ~CertifiedReal();
  CertifiedReal(const CertifiedReal& other);
  CertifiedReal(CertifiedReal&& other) noexcept;
  CertifiedReal& operator=(const CertifiedReal& other);
  CertifiedReal& operator=(CertifiedReal&& other) noexcept;

  static CertifiedReal from_integer(const BigInt& z, unsigned digits);
  static CertifiedReal from_int(long v, unsigned digits);
  static CertifiedReal from_rational(const Rational& q, unsigned digits);
  /// Parses an exact decimal literal such as "0.00227519" or "6.6e50".
  static CertifiedReal from_decimal(std::string_view text, unsigned digits);
  /// Ball [lo, hi] given exact rational endpoints (lo <= hi).
  static CertifiedReal from_interval(const Rational& lo, const Rational& hi,
                                     unsigned digits);

  unsigned precision_digits() const { return digits_; }
  mpfr_prec_t precision_bits() const;

  bool is_exact() const;
  bool is_exact_zero() const;
  /// Certified sign tests: true only if every point of the ball qualifies.
  bool is_positive() const;
  bool is_negative() const;
  bool is_nonnegative() const;
  bool contains_zero() const;
  bool contains(const Rational& x) const;
  bool overlaps(const CertifiedReal& other) const;

  /// Exact rational endpoints (directed rounding of mid -/+ rad).
  Rational lower_bound() const;
  Rational upper_bound() const;
  Rational midpoint() const;
  Rational radius() const;

  /// floor(x) if it is the same for the whole ball.
  std::optional<BigInt> floor() const;
  /// Nearest integer if the ball stays strictly inside (n - 1/2, n + 1/2).
  std::optional<BigInt> nearest_integer() const;
  /// floor of the upper endpoint; every point x of the ball has floor(x) <= it.
  BigInt floor_of_upper() const;
  /// ceil(upper) - 1: any integer k with k < x (x the true value) obeys
  /// k <= this. Equals floor(x) whenever the ball avoids the integers.
  BigInt strict_integer_bound() const;

  double to_double() const;
  /// Midpoint in scientific notation with `sig` significant digits.
  std::string mid_string(int sig = 20) const;
  std::string radius_string() const;
  /// "mid +/- rad".
  std::string to_string(int sig = 20) const;

  CertifiedReal operator-() const;
  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);

  friend CertifiedReal abs(const CertifiedReal& x);
  friend CertifiedReal sqrt(const CertifiedReal& x);
  friend CertifiedReal cbrt(const CertifiedReal& x);
  friend CertifiedReal log(const CertifiedReal& x);
  friend CertifiedReal exp(const CertifiedReal& x);

 private:
  void init(unsigned digits);
  void add_rounding_error();
  void enforce_tight(const char* op) const;
  static mpfr_prec_t bits_for(unsigned digits);

  unsigned digits_;
  mpfr_t mid_;
  mpfr_t rad_;
};

CertifiedReal operator+(const CertifiedReal& a, long b);
CertifiedReal operator-(const CertifiedReal& a, long b);
CertifiedReal operator*(const CertifiedReal& a, long b);
CertifiedReal operator/(const CertifiedReal& a, long b);
CertifiedReal operator*(long a, const CertifiedReal& b);
CertifiedReal operator*(const CertifiedReal& a, const BigInt& b);
CertifiedReal operator*(const BigInt& a, const CertifiedReal& b);
CertifiedReal operator+(long a, const CertifiedReal& b);
CertifiedReal operator-(long a, const CertifiedReal& b);

CertifiedReal pow(const CertifiedReal& x, unsigned long n);
CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b);

/// a < b for every choice of points in the two balls.
bool certainly_less(const CertifiedReal& a, const CertifiedReal& b);
bool certainly_less_equal(const CertifiedReal& a, const CertifiedReal& b);
/// Throws PrecisionExhausted when the balls overlap and the order is open.
bool decide_less(const CertifiedReal& a, const CertifiedReal& b, const char* what);

/// Runs fn(digits) starting at `initial` digits, doubling on PrecisionExhausted
/// up to `limit` digits. The last exception propagates.
template <class Fn>
auto with_precision_retry(unsigned initial, unsigned limit, Fn&& fn) {
  unsigned digits = initial;
  for (;;) {
    try {
      return fn(digits);
    } catch (const PrecisionExhausted&) {
      if (digits >= limit) throw;
      digits = digits * 2 > limit ? limit : digits * 2;
    }
  }
}

}  // namespace tlpal
