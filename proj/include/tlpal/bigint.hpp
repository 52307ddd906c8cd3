#pragma once

#include <gmpxx.h>

#include <string>

namespace tlpal {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow10(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Number of decimal digits of |z| (1 for zero).
inline std::size_t decimal_digits(const BigInt& z) {
  return z == 0 ? 1 : BigInt(abs(z)).get_str().size();
}

}  // namespace tlpal
