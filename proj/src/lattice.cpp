#include "tlpal/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace tlpal {

BigInt dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
BigInt norm_sq(const Vec2& v) { return dot(v, v); }

BigInt Lattice2D::determinant() const { return b1.x * b2.y - b2.x * b1.y; }

Lattice2D build_linear_form_lattice(const CertifiedReal& lambda1, const CertifiedReal& lambda2,
                                    const BigInt& C) {
  if (C < 1) throw std::invalid_argument("C >= 1");
  const auto rounded = [&](const CertifiedReal& lambda) {
    const auto n = (lambda * C).nearest_integer();
    if (!n) throw PrecisionExhausted("round(C lambda) for C = 10^" +
                                     std::to_string(decimal_digits(C) - 1));
    return *n;
  };
  return Lattice2D{{BigInt(1), rounded(lambda1)}, {BigInt(0), rounded(lambda2)}};
}

namespace {

// Nearest integer to num/den (den > 0), halves away from zero.
BigInt round_quotient(const BigInt& num, const BigInt& den) {
  BigInt q;
  BigInt twice = 2 * abs(num) + den;
  BigInt twice_den = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
  return num < 0 ? BigInt(-q) : q;
}

}  // namespace

ReducedBasis2D gauss_reduce(const Lattice2D& lattice) {
  if (lattice.determinant() == 0) throw std::invalid_argument("degenerate lattice");
  Vec2 u = lattice.b1;
  Vec2 v = lattice.b2;
  // Columns of U track u and v in terms of b1, b2.
  BigInt u1(1), u2(0), v1(0), v2(1);
  if (norm_sq(u) > norm_sq(v)) {
    std::swap(u, v);
    std::swap(u1, v1);
    std::swap(u2, v2);
  }
  for (;;) {
    const BigInt r = round_quotient(dot(u, v), norm_sq(u));
    if (r != 0) {
      v.x -= r * u.x;
      v.y -= r * u.y;
      v1 -= r * u1;
      v2 -= r * u2;
    }
    if (norm_sq(v) >= norm_sq(u)) break;
    std::swap(u, v);
    std::swap(u1, v1);
    std::swap(u2, v2);
  }
  ReducedBasis2D out;
  const BigInt n1 = norm_sq(u);
  out.gram_mu = Rational(dot(v, u), n1);
  out.gram_mu.canonicalize();
  out.v2_star_norm_sq = Rational(norm_sq(v)) - out.gram_mu * out.gram_mu * n1;
  out.v1 = std::move(u);
  out.v2 = std::move(v);
  out.transform = {u1, v1, u2, v2};
  return out;
}

LatticeBound lattice_lower_bound(const CertifiedReal& lambda1, const CertifiedReal& lambda2,
                                 const BigInt& X1, const BigInt& X2, const BigInt& C) {
  if (X1 < 1 || X2 < 1) throw std::invalid_argument("X1, X2 >= 1");
  LatticeBound out;
  out.C = C;
  out.lattice = build_linear_form_lattice(lambda1, lambda2, C);
  out.basis = gauss_reduce(out.lattice);

  const Rational n1(norm_sq(out.basis.v1));
  const Rational ratio = n1 / out.basis.v2_star_norm_sq;
  out.d_lambda_sq = ratio > 1 ? Rational(n1 / ratio) : n1;
  out.T = Rational(1 + X1 * X1 + X2 * X2, 2);
  out.T.canonicalize();
  const Rational X1_sq(X1 * X1);
  out.required_sq = out.T * out.T + X1_sq;
  out.condition_holds = out.d_lambda_sq >= out.required_sq;
  if (out.condition_holds) {
    const unsigned digits = lambda1.precision_digits();
    const CertifiedReal root =
        sqrt(CertifiedReal::from_rational(out.d_lambda_sq - X1_sq, digits));
    out.lower_bound = (root - CertifiedReal::from_rational(out.T, digits)) /
                      CertifiedReal::from_integer(C, digits);
  }
  return out;
}

std::optional<CertifiedReal> linear_form_lower_bound(const CertifiedReal& lambda1,
                                                     const CertifiedReal& lambda2,
                                                     const BigInt& X1, const BigInt& X2,
                                                     const BigInt& C) {
  return lattice_lower_bound(lambda1, lambda2, X1, X2, C).lower_bound;
}

BigInt lll_m_bound(const CertifiedReal& bound, long coefficient) {
  if (!bound.is_positive()) throw std::invalid_argument("lll_m_bound needs a positive bound");
  const unsigned digits = bound.precision_digits();
  const CertifiedReal threshold =
      log(CertifiedReal::from_int(coefficient, digits) / bound) /
      log(CertifiedReal::from_int(10, digits));
  const BigInt m = threshold.floor_of_upper();
  return m < 0 ? BigInt(0) : m;
}

}  // namespace tlpal
