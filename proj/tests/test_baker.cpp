#include <cmath>

#include "doctest.h"
#include "tlpal/baker.hpp"

using namespace tlpal;

namespace {

constexpr unsigned P = 80;

CertifiedReal dec(const char* s) { return CertifiedReal::from_decimal(s, P); }
CertifiedReal num(long v) { return CertifiedReal::from_int(v, P); }

// a <= x <= b certified
bool within(const CertifiedReal& x, const char* a, const char* b) {
  return certainly_less_equal(dec(a), x) && certainly_less_equal(x, dec(b));
}

}  // namespace

TEST_CASE("heights of rationals") {
  CHECK(weil_height_rational(9, 2, P).overlaps(log(num(9))));
  CHECK(weil_height_rational(-3, 6, P).overlaps(log(num(2))));
  CHECK(weil_height_rational(1, 1, P).is_exact_zero());
  CHECK_THROWS(weil_height_rational(1, 0, P));
  const CertifiedReal h = log(num(3));
  CHECK(height_power(h, -4).overlaps(4 * h));
  CHECK(height_combine(HeightOp::product, h, h).overlaps(2 * h));
  CHECK(height_combine(HeightOp::sum, h, h).overlaps(2 * h + log(num(2))));
}

TEST_CASE("height bounds hold for small digit data") {
  // h(9 / d1) <= 2 log 9 and h(x + y) <= h(x) + h(y) + log 2 on examples
  for (long d1 = 1; d1 <= 9; ++d1) {
    CHECK(certainly_less_equal(weil_height_rational(9, d1, P), 2 * log(num(9))));
  }
  for (long p = 1; p <= 30; ++p)
    for (long q = 1; q <= 30; ++q) {
      // p/q + q/p = (p^2 + q^2) / (pq)
      const CertifiedReal hx = weil_height_rational(p, q, P);
      const CertifiedReal hs = weil_height_rational(p * p + q * q, p * q, P);
      CHECK_FALSE(certainly_less(height_combine(HeightOp::sum, hx, hx), hs));
    }
}

TEST_CASE("Matveev constant") {
  // 1.4 30^4 1^4.5 1^2 (1 + log 1) = 1134000
  CHECK(matveev_constant(1, 1, {num(1)}).overlaps(num(1134000)));
  // monotone in every A_j and in t
  const CertifiedReal a = matveev_constant(2, 1, {dec("0.5"), dec("2")});
  const CertifiedReal b = matveev_constant(2, 1, {dec("0.5"), dec("3")});
  CHECK(certainly_less(a, b));
  CHECK(certainly_less(matveev_constant(2, 2, {dec("1"), dec("1")}),
                       matveev_constant(3, 2, {dec("1"), dec("1"), dec("1")})));
  LinearFormSpec spec{1, 1, num(10), {num(1)}};
  CHECK(matveev_lower_bound(spec).overlaps(num(1134000) * (1 + log(num(10)))));
  spec.A = {dec("0.1")};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec.A = {num(1), num(1)};
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
}

TEST_CASE("shaving lemma") {
  // ceil(8 H log(H)^3) for H = 8.52e42 (mpmath)
  CHECK(gsl_shave(3, dec("8.52e42")) ==
        BigInt("65837397389304074330856414987271363098613675360484", 10));
  CHECK(gsl_shave(3, dec("8.52e42")) <= 66 * pow10(49));
  CHECK_THROWS_AS(gsl_shave(3, num(1000)), std::invalid_argument);
  CHECK_THROWS_AS(gsl_shave(0, num(1000)), std::invalid_argument);

  // Direct check for r = 1: every L with L / log L < H is below the bound.
  for (long H : {5L, 10L, 50L, 300L}) {
    const BigInt bound = gsl_shave(1, num(H));
    long largest = 0;
    for (long L = 3; L < 100000; ++L) {
      if (L / std::log(double(L)) < H) largest = L;
    }
    CHECK(BigInt(largest) < bound);
  }
}

TEST_CASE("length relation") {
  const DominantRoot root = dominant_root(P);
  // S(8) = 131 has 2l + m = 3
  CHECK(length_index_relation(3, 8, root));
  CHECK_FALSE(length_index_relation(10, 8, root));
}

TEST_CASE("initial bounds (mpmath values)") {
  const InitialBounds b = derive_initial_bounds(dominant_root(250), 500);
  CHECK(within(b.step1_magnitude, "150080838375788.451150", "150080838375788.451151"));
  CHECK(within(b.step2_magnitude, "5125615806393517689293865331.768048", "5125615806393517689293865331.768049"));
  CHECK(within(b.step3_length_coeff, "1.02512316e28", "1.02512317e28"));
  CHECK(within(b.step3_magnitude, "350103819769002924996191403652931788844071.242458",
               "350103819769002924996191403652931788844071.242459"));
  CHECK(within(b.H, "898891285844845182883075417345101199613260.699420",
               "898891285844845182883075417345101199613260.699421"));
  CHECK(b.n_bound == BigInt("6482689952014784716086439615362445871762850374419", 10));
  CHECK(b.two_ell_plus_m_bound == BigInt("1715640288081657764506332455676346045969785636030", 10));
  CHECK(b.n_low == 500);

  // 7.17e13 is what step 1 gives without the 1 + log D factor.
  CHECK(certainly_less_equal(b.step2_magnitude, dec("1.55e28")));
  CHECK(certainly_less_equal(b.step3_magnitude, dec("5.13e42")));
  CHECK(certainly_less(dec("7.17e13"), b.step1_magnitude));

  // A larger searched range can only lower the bound.
  const InitialBounds wider = derive_initial_bounds(dominant_root(250), 5000);
  CHECK(wider.n_bound <= b.n_bound);
  CHECK_THROWS(derive_initial_bounds(dominant_root(250), 2));
}
