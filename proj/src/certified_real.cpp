#include "tlpal/certified_real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tlpal {

namespace {

constexpr mpfr_prec_t kRadiusBits = 64;
constexpr double kLog2Of10 = 3.321928094887362;

// Scoped MPFR temporary.
class Scratch {
 public:
  explicit Scratch(mpfr_prec_t bits = kRadiusBits) { mpfr_init2(v_, bits); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

Rational to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  BigInt m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  Rational r(m);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Adds one unit in the last place of `mid` to `rad` (upward).
void add_ulp(mpfr_ptr rad, mpfr_srcptr mid) {
  if (mpfr_zero_p(mid) || !mpfr_number_p(mid)) return;
  Scratch u;
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  mpfr_add(rad, rad, u, MPFR_RNDU);
}

}  // namespace

mpfr_prec_t CertifiedReal::bits_for(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 16;
}

void CertifiedReal::init(unsigned digits) {
  if (digits == 0) throw std::invalid_argument("precision must be positive");
  digits_ = digits;
  mpfr_init2(mid_, bits_for(digits));
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

CertifiedReal::CertifiedReal() { init(kDefaultPrecisionDigits); }
CertifiedReal::CertifiedReal(unsigned precision_digits) { init(precision_digits); }

CertifiedReal::~CertifiedReal() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

CertifiedReal::CertifiedReal(const CertifiedReal& other) {
  init(other.digits_);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

CertifiedReal::CertifiedReal(CertifiedReal&& other) noexcept {
  // mpfr_init2 does not throw; digits_ of `other` is always valid.
  digits_ = other.digits_;
  mpfr_init2(mid_, mpfr_get_prec(other.mid_));
  mpfr_init2(rad_, kRadiusBits);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  mpfr_set_zero(other.mid_, 1);
  mpfr_set_zero(other.rad_, 1);
}

CertifiedReal& CertifiedReal::operator=(const CertifiedReal& other) {
  if (this == &other) return *this;
  digits_ = other.digits_;
  mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
  return *this;
}

CertifiedReal& CertifiedReal::operator=(CertifiedReal&& other) noexcept {
  if (this == &other) return *this;
  std::swap(digits_, other.digits_);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

mpfr_prec_t CertifiedReal::precision_bits() const { return mpfr_get_prec(mid_); }

void CertifiedReal::add_rounding_error() { add_ulp(rad_, mid_); }

void CertifiedReal::enforce_tight(const char* op) const {
  if (mpfr_zero_p(rad_)) return;
  if (!mpfr_number_p(mid_) || !mpfr_number_p(rad_)) {
    throw PrecisionExhausted(std::string(op) + ": non-finite ball");
  }
  // rad < 2^e_rad and max(1, |mid|) >= 2^e_mid.
  const long e_rad = mpfr_get_exp(rad_);
  const long e_mid = mpfr_zero_p(mid_) ? 0 : std::max(0L, long(mpfr_get_exp(mid_)) - 1);
  const long budget = static_cast<long>(std::ceil(digits_ / 2.0 * kLog2Of10));
  if (e_rad > e_mid - budget) {
    throw PrecisionExhausted(std::string(op) + " at " + std::to_string(digits_) +
                             " digits (radius " + radius_string() + ")");
  }
}

CertifiedReal CertifiedReal::from_integer(const BigInt& z, unsigned digits) {
  CertifiedReal r(digits);
  if (mpfr_set_z(r.mid_, z.get_mpz_t(), MPFR_RNDN) != 0) r.add_rounding_error();
  r.enforce_tight("from_integer");
  return r;
}

CertifiedReal CertifiedReal::from_int(long v, unsigned digits) {
  return from_integer(BigInt(v), digits);
}

CertifiedReal CertifiedReal::from_rational(const Rational& q, unsigned digits) {
  if (q.get_den() == 1) return from_integer(q.get_num(), digits);
  return from_integer(q.get_num(), digits) / from_integer(q.get_den(), digits);
}

CertifiedReal CertifiedReal::from_decimal(std::string_view text, unsigned digits) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string mantissa;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    const std::string rest(text.substr(i + 1));
    char* end = nullptr;
    exponent = std::strtol(rest.c_str(), &end, 10);
    if (end == rest.c_str() || *end != '\0') {
      throw std::invalid_argument("bad decimal literal: " + std::string(text));
    }
    i = text.size();
  }
  if (mantissa.empty() || i != text.size()) {
    throw std::invalid_argument("bad decimal literal: " + std::string(text));
  }
  Rational q{BigInt(mantissa, 10)};
  const long shift = exponent - frac_digits;
  if (shift >= 0) {
    q *= pow10(static_cast<unsigned long>(shift));
  } else {
    q /= pow10(static_cast<unsigned long>(-shift));
  }
  q.canonicalize();
  if (negative) q = -q;
  return from_rational(q, digits);
}

CertifiedReal CertifiedReal::from_interval(const Rational& lo, const Rational& hi,
                                           unsigned digits) {
  if (hi < lo) throw std::invalid_argument("from_interval: hi < lo");
  CertifiedReal r(digits);
  const Rational centre = (lo + hi) / 2;
  mpfr_set_q(r.mid_, centre.get_mpq_t(), MPFR_RNDN);
  const Rational m = to_rational(r.mid_);
  const Rational spread = std::max(Rational(hi - m), Rational(m - lo));
  mpfr_set_q(r.rad_, spread.get_mpq_t(), MPFR_RNDU);
  r.enforce_tight("from_interval");
  return r;
}

bool CertifiedReal::is_exact() const { return mpfr_zero_p(rad_) != 0; }
bool CertifiedReal::is_exact_zero() const { return is_exact() && mpfr_zero_p(mid_); }

bool CertifiedReal::is_positive() const {
  return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}
bool CertifiedReal::is_negative() const {
  return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}
bool CertifiedReal::is_nonnegative() const {
  return mpfr_sgn(mid_) >= 0 && mpfr_cmpabs(mid_, rad_) >= 0;
}
bool CertifiedReal::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool CertifiedReal::contains(const Rational& x) const {
  return abs(Rational(x - midpoint())) <= radius();
}

bool CertifiedReal::overlaps(const CertifiedReal& other) const {
  return abs(Rational(midpoint() - other.midpoint())) <= radius() + other.radius();
}

Rational CertifiedReal::lower_bound() const {
  Scratch t(precision_bits());
  mpfr_sub(t, mid_, rad_, MPFR_RNDD);
  return to_rational(t);
}

Rational CertifiedReal::upper_bound() const {
  Scratch t(precision_bits());
  mpfr_add(t, mid_, rad_, MPFR_RNDU);
  return to_rational(t);
}

Rational CertifiedReal::midpoint() const { return to_rational(mid_); }
Rational CertifiedReal::radius() const { return to_rational(rad_); }

std::optional<BigInt> CertifiedReal::floor() const {
  BigInt lo = floor_of(lower_bound());
  if (lo != floor_of(upper_bound())) return std::nullopt;
  return lo;
}

std::optional<BigInt> CertifiedReal::nearest_integer() const {
  const BigInt n = floor_of(midpoint() + Rational(1, 2));
  const Rational half(1, 2);
  if (lower_bound() > Rational(n) - half && upper_bound() < Rational(n) + half) return n;
  return std::nullopt;
}

BigInt CertifiedReal::floor_of_upper() const { return floor_of(upper_bound()); }
BigInt CertifiedReal::strict_integer_bound() const { return ceil_of(upper_bound()) - 1; }

double CertifiedReal::to_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

std::string CertifiedReal::mid_string(int sig) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(0, sig - 1), mid_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string CertifiedReal::radius_string() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.3Re", rad_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string CertifiedReal::to_string(int sig) const {
  return mid_string(sig) + " +/- " + radius_string();
}

CertifiedReal CertifiedReal::operator-() const {
  CertifiedReal r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.digits_, b.digits_));
  const int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  if (t != 0) r.add_rounding_error();
  r.enforce_tight("add");
  return r;
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.digits_, b.digits_));
  const int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  if (t != 0) r.add_rounding_error();
  r.enforce_tight("sub");
  return r;
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.digits_, b.digits_));
  const int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |a| rb + |b| ra + ra rb
  Scratch abs_a, abs_b, term;
  mpfr_abs(abs_a, a.mid_, MPFR_RNDU);
  mpfr_abs(abs_b, b.mid_, MPFR_RNDU);
  mpfr_mul(r.rad_, abs_a, b.rad_, MPFR_RNDU);
  mpfr_mul(term, abs_b, a.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, term, MPFR_RNDU);
  mpfr_mul(term, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, term, MPFR_RNDU);
  if (t != 0) r.add_rounding_error();
  r.enforce_tight("mul");
  return r;
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  if (b.is_exact_zero()) throw std::domain_error("division by zero");
  if (b.contains_zero()) throw PrecisionExhausted("division by a ball containing zero");
  CertifiedReal r(std::max(a.digits_, b.digits_));
  const int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // (ra + |a/b| rb) / (|b| - rb)
  Scratch quotient, ulp, den, num;
  mpfr_abs(quotient, r.mid_, MPFR_RNDU);
  mpfr_set_zero(ulp, 1);
  add_ulp(ulp, r.mid_);
  mpfr_add(quotient, quotient, ulp, MPFR_RNDU);
  mpfr_abs(den, b.mid_, MPFR_RNDD);
  mpfr_sub(den, den, b.rad_, MPFR_RNDD);
  mpfr_mul(num, quotient, b.rad_, MPFR_RNDU);
  mpfr_add(num, num, a.rad_, MPFR_RNDU);
  mpfr_div(r.rad_, num, den, MPFR_RNDU);
  if (t != 0) r.add_rounding_error();
  r.enforce_tight("div");
  return r;
}

CertifiedReal abs(const CertifiedReal& x) {
  CertifiedReal r(x);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

CertifiedReal sqrt(const CertifiedReal& x) {
  if (x.is_exact_zero()) return CertifiedReal(x.digits_);
  if (x.is_negative()) throw std::domain_error("sqrt of a negative number");
  Scratch lo;
  mpfr_sub(lo, x.mid_, x.rad_, MPFR_RNDD);
  if (mpfr_sgn(lo.get()) <= 0) throw PrecisionExhausted("sqrt of a ball touching zero");
  CertifiedReal r(x.digits_);
  const int t = mpfr_sqrt(r.mid_, x.mid_, MPFR_RNDN);
  // rad / (2 sqrt(lo))
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_mul_2ui(lo, lo, 1, MPFR_RNDD);
  mpfr_div(r.rad_, x.rad_, lo, MPFR_RNDU);
  if (t != 0) r.add_rounding_error();
  r.enforce_tight("sqrt");
  return r;
}

CertifiedReal cbrt(const CertifiedReal& x) {
  if (x.is_exact_zero()) return CertifiedReal(x.digits_);
  Scratch lo;
  mpfr_abs(lo, x.mid_, MPFR_RNDD);
  mpfr_sub(lo, lo, x.rad_, MPFR_RNDD);
  if (mpfr_sgn(lo.get()) <= 0) throw PrecisionExhausted("cbrt of a ball touching zero");
  CertifiedReal r(x.digits_);
  const int t = mpfr_cbrt(r.mid_, x.mid_, MPFR_RNDN);
  // rad / (3 cbrt(lo)^2)
  mpfr_cbrt(lo, lo, MPFR_RNDD);
  mpfr_sqr(lo, lo, MPFR_RNDD);
  mpfr_mul_ui(lo, lo, 3, MPFR_RNDD);
  mpfr_div(r.rad_, x.rad_, lo, MPFR_RNDU);
  if (t != 0) r.add_rounding_error();
  r.enforce_tight("cbrt");
  return r;
}

CertifiedReal log(const CertifiedReal& x) {
  if (!x.is_positive()) {
    if (mpfr_sgn(x.mid_) <= 0 && !x.contains_zero()) {
      throw std::domain_error("log of a negative number");
    }
    if (x.is_exact_zero()) throw std::domain_error("log of zero");
    throw PrecisionExhausted("log of a ball touching zero");
  }
  CertifiedReal r(x.digits_);
  const int t = mpfr_log(r.mid_, x.mid_, MPFR_RNDN);
  if (!x.is_exact()) {
    Scratch lo;
    mpfr_sub(lo, x.mid_, x.rad_, MPFR_RNDD);
    mpfr_div(r.rad_, x.rad_, lo, MPFR_RNDU);
  }
  if (t != 0) r.add_rounding_error();
  r.enforce_tight("log");
  return r;
}

CertifiedReal exp(const CertifiedReal& x) {
  CertifiedReal r(x.digits_);
  const int t = mpfr_exp(r.mid_, x.mid_, MPFR_RNDN);
  if (!x.is_exact()) {
    Scratch hi;
    mpfr_add(hi, x.mid_, x.rad_, MPFR_RNDU);
    mpfr_exp(hi, hi, MPFR_RNDU);
    mpfr_mul(r.rad_, x.rad_, hi, MPFR_RNDU);
  }
  if (t != 0) r.add_rounding_error();
  r.enforce_tight("exp");
  return r;
}

CertifiedReal operator+(const CertifiedReal& a, long b) {
  return a + CertifiedReal::from_int(b, a.precision_digits());
}
CertifiedReal operator-(const CertifiedReal& a, long b) {
  return a - CertifiedReal::from_int(b, a.precision_digits());
}
CertifiedReal operator*(const CertifiedReal& a, long b) {
  return a * CertifiedReal::from_int(b, a.precision_digits());
}
CertifiedReal operator/(const CertifiedReal& a, long b) {
  return a / CertifiedReal::from_int(b, a.precision_digits());
}
CertifiedReal operator*(long a, const CertifiedReal& b) { return b * a; }
CertifiedReal operator*(const CertifiedReal& a, const BigInt& b) {
  return a * CertifiedReal::from_integer(b, a.precision_digits());
}
CertifiedReal operator*(const BigInt& a, const CertifiedReal& b) { return b * a; }
CertifiedReal operator-(long a, const CertifiedReal& b) {
  return CertifiedReal::from_int(a, b.precision_digits()) - b;
}
CertifiedReal operator+(long a, const CertifiedReal& b) { return b + a; }


CertifiedReal pow(const CertifiedReal& x, unsigned long n) {
  CertifiedReal result = CertifiedReal::from_int(1, x.precision_digits());
  CertifiedReal base = x;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b) {
  if (certainly_less_equal(b, a)) return a;
  if (certainly_less_equal(a, b)) return b;
  return CertifiedReal::from_interval(std::max(a.lower_bound(), b.lower_bound()),
                                      std::max(a.upper_bound(), b.upper_bound()),
                                      std::max(a.precision_digits(), b.precision_digits()));
}

bool certainly_less(const CertifiedReal& a, const CertifiedReal& b) {
  return a.upper_bound() < b.lower_bound();
}

bool certainly_less_equal(const CertifiedReal& a, const CertifiedReal& b) {
  return a.upper_bound() <= b.lower_bound();
}

bool decide_less(const CertifiedReal& a, const CertifiedReal& b, const char* what) {
  if (certainly_less(a, b)) return true;
  if (certainly_less_equal(b, a)) return false;
  throw PrecisionExhausted(what);
}

}  // namespace tlpal
