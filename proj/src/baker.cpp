#include "tlpal/baker.hpp"

#include <stdexcept>

namespace tlpal {

namespace {

CertifiedReal constant(long v, unsigned digits) { return CertifiedReal::from_int(v, digits); }

}  // namespace

CertifiedReal weil_height_rational(const BigInt& p, const BigInt& q, unsigned digits) {
  if (q == 0) throw std::invalid_argument("height of p/0");
  Rational r(p, q);
  r.canonicalize();
  const BigInt num = abs(r.get_num());
  const BigInt& den = r.get_den();
  return log(CertifiedReal::from_integer(num > den ? num : den, digits));
}

CertifiedReal height_combine(HeightOp op, const CertifiedReal& h1, const CertifiedReal& h2) {
  if (op == HeightOp::product) return h1 + h2;
  return h1 + h2 + log(constant(2, h1.precision_digits()));
}

CertifiedReal height_power(const CertifiedReal& h, long s) { return h * (s < 0 ? -s : s); }

void validate(const LinearFormSpec& spec) {
  if (spec.t < 1 || spec.D < 1) throw std::invalid_argument("t, D >= 1");
  if (spec.A.size() != spec.t) throw std::invalid_argument("need exactly t values A_j");
  if (spec.B.upper_bound() < 1) throw std::invalid_argument("B >= 1");
  const Rational floor_a(16, 100);
  for (const CertifiedReal& a : spec.A) {
    if (a.upper_bound() < floor_a) throw std::invalid_argument("A_j >= 0.16");
  }
}

CertifiedReal matveev_constant(unsigned t, unsigned D, const std::vector<CertifiedReal>& A) {
  const unsigned digits = A.empty() ? kDefaultPrecisionDigits : A.front().precision_digits();
  CertifiedReal c = CertifiedReal::from_rational(Rational(14, 10), digits);
  c = c * pow(constant(30, digits), t + 3);
  // t^4.5 = t^4 sqrt(t)
  c = c * pow(constant(t, digits), 4) * sqrt(constant(t, digits));
  c = c * long(D) * long(D);
  c = c * (1 + log(constant(D, digits)));
  for (const CertifiedReal& a : A) c = c * a;
  return c;
}

CertifiedReal matveev_lower_bound(const LinearFormSpec& spec) {
  validate(spec);
  return matveev_constant(spec.t, spec.D, spec.A) * (1 + log(spec.B));
}

BigInt gsl_shave(unsigned r, const CertifiedReal& H) {
  if (r < 1) throw std::invalid_argument("r >= 1");
  const unsigned digits = H.precision_digits();
  BigInt hypothesis;
  mpz_ui_pow_ui(hypothesis.get_mpz_t(), 4UL * r * r, r);
  if (!certainly_less(CertifiedReal::from_integer(hypothesis, digits), H)) {
    throw std::invalid_argument("gsl_shave: H must exceed (4 r^2)^r = " + hypothesis.get_str());
  }
  const CertifiedReal value = pow(constant(2, digits), r) * H * pow(log(H), r);
  BigInt ceiling;
  const Rational hi = value.upper_bound();
  mpz_cdiv_q(ceiling.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  return ceiling;
}

bool length_index_relation(const BigInt& two_ell_plus_m, const BigInt& n,
                           const DominantRoot& root) {
  const unsigned digits = root.precision_digits();
  const CertifiedReal length = log(constant(10, digits)) * two_ell_plus_m;
  const CertifiedReal index = root.log_alpha * n;
  return decide_less(length - 3, index, "length_index_relation lower") &&
         decide_less(index, length + 1, "length_index_relation upper");
}

InitialBounds derive_initial_bounds(const DominantRoot& root, std::size_t n_low) {
  if (n_low < 3) throw std::invalid_argument("n_low >= 3");
  const unsigned digits = root.precision_digits();
  const auto c = [&](long v) { return constant(v, digits); };
  const CertifiedReal log2 = log(c(2));
  const CertifiedReal log3 = log(c(3));
  const CertifiedReal log10 = log(c(10));
  const CertifiedReal& log_alpha = root.log_alpha;
  const CertifiedReal ninth = CertifiedReal::from_rational(Rational(1, 9), digits);
  const unsigned D = 3;

  InitialBounds out;
  out.n_low = n_low;

  // Step 1: Gamma1 = (9/d1) alpha^n 10^-(2l+m) - 1, |Gamma1| < 28 / 10^l.
  // A1 = D h(9/d1) <= 3 * 2 log 9 = 12 log 3.
  out.step1_magnitude = matveev_constant(3, D, {12 * log3, log_alpha, 3 * log10});
  // l log 10 < s1 (1 + log n) + log 28 <= (s1 + log 28)(1 + log n).
  out.ell_bound_coeff = out.step1_magnitude + log(c(28));

  // Step 2: eta1 = 9 / (d1 10^l - (d1 - d2)), |Gamma2| < 19 / 10^m.
  // h(eta1) <= 10 log 3 + l log 10 and |log eta1| <= l log 10 + 4 log 3 + 1/9.
  const CertifiedReal step2_height = 10 * log3 + out.ell_bound_coeff;
  const CertifiedReal step2_log = out.ell_bound_coeff + 4 * log3 + ninth;
  out.step2_a1_coeff = max(long(D) * step2_height, step2_log);
  out.step2_magnitude = matveev_constant(3, D, {out.step2_a1_coeff, log_alpha, 3 * log10});
  out.m_bound_coeff = out.step2_magnitude + log(c(19));

  // Step 3: eta1 = (d1 10^(l+m) - (d1 - d2) 10^m + (d1 - d2)) / 9,
  // |Gamma3| < 2 / alpha^n. h(eta1) <= 16 log 3 + (2m + l) log 10.
  out.step3_length_coeff = 2 * out.m_bound_coeff + out.ell_bound_coeff;
  const CertifiedReal step3_height = 16 * log3 + out.step3_length_coeff;
  const CertifiedReal step3_log = 5 * log3 + out.ell_bound_coeff + out.m_bound_coeff + ninth;
  out.step3_a1_coeff = max(long(D) * step3_height, step3_log);
  out.step3_magnitude = matveev_constant(3, D, {out.step3_a1_coeff, log_alpha, 3 * log10});

  // n log alpha < s3 (1 + log n)^3 + log 2 and, for n > n_low,
  // (1 + log n)^3 <= (1 + 1/log n_low)^3 (log n)^3, 1 <= (log n / log n_low)^3.
  const CertifiedReal log_low = log(c(static_cast<long>(n_low)));
  const CertifiedReal widen = pow(1 + c(1) / log_low, 3);
  out.H = (out.step3_magnitude * widen + log2 / pow(log_low, 3)) / log_alpha;

  out.n_bound = gsl_shave(3, out.H);
  // Lemma on lengths: (2l + m) log 10 < n log alpha + 3.
  const CertifiedReal length = (log_alpha * out.n_bound + 3) / log10;
  const Rational hi = length.upper_bound();
  mpz_cdiv_q(out.two_ell_plus_m_bound.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  return out;
}

}  // namespace tlpal
