#pragma once

// Palindromic concatenations of two distinct repdigits:
//   d1...d1 d2...d2 d1...d1   (ell, m, ell digits; d1 != 0, d1 != d2)
// which equals (d1 10^(2ell+m) - (d1-d2) 10^(ell+m) + (d1-d2) 10^ell - d1) / 9.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tlpal/bigint.hpp"

namespace tlpal {

struct PatternParams {
  int d1 = 1;
  int d2 = 0;
  unsigned long ell = 1;
  unsigned long m = 1;

  bool operator==(const PatternParams&) const = default;
};

bool is_valid(const PatternParams& p);

struct PatternSolution {
  std::size_t n = 0;
  PatternParams params;

  bool operator==(const PatternSolution&) const = default;
};

/// Closed form. Throws std::invalid_argument for invalid parameters.
BigInt compose(const PatternParams& p);

/// d1^ell d2^m d1^ell as a decimal string.
std::string compose_digits(const PatternParams& p);

/// The unique parameters with compose(params) == n, if any.
std::optional<PatternParams> recognize(const BigInt& n);

/// Every index in [0, n_max] whose Tribonacci-Lucas number has the pattern,
/// in increasing order. Requires n_max >= 3.
std::vector<PatternSolution> search_low_range(std::size_t n_max);

std::string to_string(const PatternParams& p);

}  // namespace tlpal
