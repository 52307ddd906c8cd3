#pragma once

// Two-dimensional lattice machinery for lower bounds on |l1 x1 + l2 x2|.
//
// For C > 0 let L be generated by the columns (1, round(C l1)) and
// (0, round(C l2)). With a reduced basis v1, v2 and Gram-Schmidt v2*,
//     d = |v1| / max(1, |v1| / |v2*|),   T = (1 + X1^2 + X2^2) / 2,
// and d^2 >= T^2 + X1^2, every |x_i| <= X_i, (x1, x2) != 0 satisfies
//     |l1 x1 + l2 x2| >= (sqrt(d^2 - X1^2) - T) / C.

#include <array>
#include <optional>

#include "tlpal/bigint.hpp"
#include "tlpal/certified_real.hpp"

namespace tlpal {

struct Vec2 {
  BigInt x;
  BigInt y;

  bool operator==(const Vec2&) const = default;
};

BigInt dot(const Vec2& a, const Vec2& b);
BigInt norm_sq(const Vec2& v);

struct Lattice2D {
  Vec2 b1;
  Vec2 b2;

  BigInt determinant() const;
};

struct ReducedBasis2D {
  Vec2 v1;
  Vec2 v2;
  /// <v2, v1> / <v1, v1>
  Rational gram_mu;
  Rational v2_star_norm_sq;
  /// [v1 v2] = [b1 b2] * U, stored row-major {u11, u12, u21, u22}.
  std::array<BigInt, 4> transform;
};

Lattice2D build_linear_form_lattice(const CertifiedReal& lambda1, const CertifiedReal& lambda2,
                                    const BigInt& C);

/// Lagrange-Gauss reduction. v1 is a shortest nonzero vector of the lattice.
ReducedBasis2D gauss_reduce(const Lattice2D& lattice);

struct LatticeBound {
  BigInt C;
  Lattice2D lattice;
  ReducedBasis2D basis;
  Rational d_lambda_sq;
  Rational T;
  /// T^2 + X1^2
  Rational required_sq;
  bool condition_holds = false;
  std::optional<CertifiedReal> lower_bound;
};

/// Full computation with the intermediate quantities kept for reporting.
LatticeBound lattice_lower_bound(const CertifiedReal& lambda1, const CertifiedReal& lambda2,
                                 const BigInt& X1, const BigInt& X2, const BigInt& C);

/// The lower bound, or nullopt when d^2 < T^2 + X1^2 (C too small).
std::optional<CertifiedReal> linear_form_lower_bound(const CertifiedReal& lambda1,
                                                     const CertifiedReal& lambda2,
                                                     const BigInt& X1, const BigInt& X2,
                                                     const BigInt& C);

/// From log|form| < log(coefficient) - m log 10 and |form| >= bound:
/// m <= floor((log coefficient - log bound) / log 10), clamped at 0.
BigInt lll_m_bound(const CertifiedReal& bound, long coefficient = 38);

}  // namespace tlpal
