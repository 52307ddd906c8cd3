#include "tlpal/pattern.hpp"

#include <stdexcept>

#include "tlpal/recurrence.hpp"

namespace tlpal {

bool is_valid(const PatternParams& p) {
  return p.d1 >= 1 && p.d1 <= 9 && p.d2 >= 0 && p.d2 <= 9 && p.d1 != p.d2 && p.ell >= 1 &&
         p.m >= 1;
}

BigInt compose(const PatternParams& p) {
  if (!is_valid(p)) throw std::invalid_argument("invalid pattern " + to_string(p));
  const long diff = p.d1 - p.d2;
  BigInt numerator = p.d1 * pow10(2 * p.ell + p.m) - diff * pow10(p.ell + p.m) +
                     diff * pow10(p.ell) - p.d1;
  BigInt value, rest;
  mpz_fdiv_qr_ui(value.get_mpz_t(), rest.get_mpz_t(), numerator.get_mpz_t(), 9);
  if (rest != 0) throw std::logic_error("closed form not divisible by 9");
  return value;
}

std::string compose_digits(const PatternParams& p) {
  if (!is_valid(p)) throw std::invalid_argument("invalid pattern " + to_string(p));
  const std::string outer(p.ell, static_cast<char>('0' + p.d1));
  return outer + std::string(p.m, static_cast<char>('0' + p.d2)) + outer;
}

std::optional<PatternParams> recognize(const BigInt& n) {
  if (n <= 0) return std::nullopt;
  const std::string s = n.get_str();
  const char outer = s.front();
  std::size_t ell = 0;
  while (ell < s.size() && s[ell] == outer) ++ell;
  if (2 * ell >= s.size()) return std::nullopt;
  const std::size_t m = s.size() - 2 * ell;
  const char inner = s[ell];
  for (std::size_t i = ell; i < ell + m; ++i) {
    if (s[i] != inner) return std::nullopt;
  }
  for (std::size_t i = ell + m; i < s.size(); ++i) {
    if (s[i] != outer) return std::nullopt;
  }
  return PatternParams{outer - '0', inner - '0', ell, m};
}

std::vector<PatternSolution> search_low_range(std::size_t n_max) {
  if (n_max < 3) throw std::invalid_argument("search_low_range needs n_max >= 3");
  std::vector<PatternSolution> found;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (auto params = recognize(trib_lucas(n))) found.push_back({n, *params});
  }
  return found;
}

std::string to_string(const PatternParams& p) {
  return "(" + std::to_string(p.d1) + "," + std::to_string(p.d2) + "," + std::to_string(p.ell) +
         "," + std::to_string(p.m) + ")";
}

}  // namespace tlpal
