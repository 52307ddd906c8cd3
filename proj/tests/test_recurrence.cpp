#include <array>
#include <thread>
#include <vector>

#include "doctest.h"
#include "tlpal/recurrence.hpp"

using namespace tlpal;

namespace {

using Mat = std::array<BigInt, 9>;

Mat mul(const Mat& a, const Mat& b) {
  Mat c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      c[3 * i + j] = 0;
      for (int k = 0; k < 3; ++k) c[3 * i + j] += a[3 * i + k] * b[3 * k + j];
    }
  return c;
}

// S(n) is the trace of the n-th power of the companion matrix.
BigInt trace_of_power(std::size_t n) {
  Mat r = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  Mat base = {1, 1, 1, 1, 0, 0, 0, 1, 0};
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r[0] + r[4] + r[8];
}

}  // namespace

TEST_CASE("initial terms") {
  // OEIS A001644
  const long expected[] = {3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443, 815, 1499, 2757, 5071};
  for (std::size_t n = 0; n < std::size(expected); ++n) CHECK(trib_lucas(n) == expected[n]);
}

TEST_CASE("recurrence identity up to 2000") {
  TribLucasSequence s;
  for (std::size_t n = 0; n + 3 <= 2000; ++n) {
    REQUIRE(s.term(n + 3) == s.term(n + 2) + s.term(n + 1) + s.term(n));
  }
  CHECK(s.cached_size() >= 2001);
}

TEST_CASE("agrees with the companion-matrix trace") {
  for (std::size_t n : {0u, 1u, 2u, 3u, 8u, 57u, 500u, 1234u, 2000u}) {
    CHECK(trib_lucas(n) == trace_of_power(n));
  }
}

TEST_CASE("concurrent readers see the same terms") {
  TribLucasSequence s;
  std::vector<BigInt> got(8);
  std::vector<std::jthread> pool;
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] { got[t] = s.term(900 + t * 13); });
  }
  pool.clear();
  for (int t = 0; t < 8; ++t) CHECK(got[t] == trace_of_power(900 + t * 13));
}

TEST_CASE("dominant root") {
  const DominantRoot r = dominant_root(250);
  CHECK(certainly_less(CertifiedReal::from_decimal("1.83", 250), r.alpha));
  CHECK(certainly_less(r.alpha, CertifiedReal::from_decimal("1.84", 250)));
  // 1.839286755214161132551852564653286600424178746097592246778758639404...
  CHECK(r.alpha.overlaps(CertifiedReal::from_interval(
      Rational(BigInt("1839286755214161132551852564653286600424178746097592246778758639404", 10),
               pow10(66)),
      Rational(BigInt("1839286755214161132551852564653286600424178746097592246778758639405", 10),
               pow10(66)),
      100)));
  const CertifiedReal residual = abs(characteristic_polynomial(r.alpha));
  CHECK(residual.upper_bound() < Rational(1) / Rational(pow10(125)));
  CHECK_THROWS(dominant_root(10));
}

TEST_CASE("Newton root overlaps the radical formula") {
  for (unsigned P : {40u, 100u, 250u, 600u}) {
    CHECK(dominant_root(P).alpha.overlaps(dominant_root_radicals(P)));
  }
}

TEST_CASE("precision monotonicity of the root") {
  const DominantRoot a = dominant_root(60), b = dominant_root(300);
  CHECK(a.alpha.overlaps(b.alpha));
  CHECK(b.alpha.radius() < a.alpha.radius());
  CHECK(a.log_alpha.overlaps(b.log_alpha));
}

TEST_CASE("Binet residual and growth bounds up to 1000") {
  CHECK(first_binet_residual_failure(1000) == 0);
  CHECK(first_growth_bounds_failure(1000) == 0);
  const DominantRoot r = dominant_root(100);
  CHECK(binet_residual_check(1, r));
  CHECK(growth_bounds_check(1, r));
  CHECK(growth_bounds_check(8, r));
}
