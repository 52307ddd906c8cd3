#include "tlpal/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "tlpal/errors.hpp"

namespace tlpal {

ReductionOutcome ReductionOutcome::bound(BigInt value, Certificate cert) {
  ReductionOutcome r;
  r.kind = Kind::bound;
  r.bound_value = std::max(BigInt(0), std::move(value));
  r.certificate = std::move(cert);
  return r;
}

ReductionOutcome ReductionOutcome::failure(std::string reason, Certificate cert) {
  ReductionOutcome r;
  r.kind = Kind::failure;
  r.failure_reason = std::move(reason);
  r.certificate = std::move(cert);
  return r;
}

namespace {

void require(bool positive, bool negative_or_zero, const char* what) {
  if (positive) return;
  if (negative_or_zero) throw std::invalid_argument(what);
  throw PrecisionExhausted(what);
}

}  // namespace

ReductionOutcome baker_davenport_reduce(const DPInstance& inst, const ContinuedFraction& cf,
                                        std::size_t max_attempts) {
  const unsigned digits = inst.kappa.precision_digits();
  require(inst.A.is_positive(), inst.A.upper_bound() <= 0, "A > 0");
  const CertifiedReal B_minus_one = inst.B - 1;
  require(B_minus_one.is_positive(), B_minus_one.upper_bound() <= 0, "B > 1");
  if (inst.M <= 1) throw std::invalid_argument("M > 1");

  const Convergent first = first_convergent_exceeding(cf, 6 * inst.M);
  const CertifiedReal M = CertifiedReal::from_integer(inst.M, digits);

  Certificate cert;
  cert.method = "baker-davenport";
  const auto epsilon_at = [&](const Convergent& c) {
    return nearest_integer_distance(inst.mu * c.q) -
           M * nearest_integer_distance(inst.kappa * c.q);
  };

  if (inst.mu.is_exact_zero()) {
    cert.convergent_index = first.index;
    cert.q = first.q;
    cert.epsilon = epsilon_at(first);
    cert.convergents_tried = 1;
    return ReductionOutcome::failure("epsilon nonpositive (mu = 0)", cert);
  }

  const auto& convergents = cf.convergents();
  const std::size_t end = std::min(convergents.size(), first.index + max_attempts);
  for (std::size_t k = first.index; k < end; ++k) {
    const Convergent& c = convergents[k];
    CertifiedReal eps = epsilon_at(c);
    ++cert.convergents_tried;
    cert.convergent_index = c.index;
    cert.q = c.q;
    if (eps.is_positive()) {
      const CertifiedReal threshold = log(inst.A * c.q / eps) / log(inst.B);
      cert.epsilon = std::move(eps);
      cert.threshold = threshold;
      return ReductionOutcome::bound(threshold.strict_integer_bound(), cert);
    }
    if (!(eps.upper_bound() <= 0)) {
      throw PrecisionExhausted("sign of epsilon at convergent " + std::to_string(c.index));
    }
    cert.epsilon = std::move(eps);
  }
  if (end < first.index + max_attempts && cf.truncated_by_precision()) {
    throw PrecisionExhausted("ran out of convergents while epsilon <= 0");
  }
  return ReductionOutcome::failure(
      "epsilon nonpositive for convergents " + std::to_string(first.index) + ".." +
          std::to_string(end - 1),
      cert);
}

ReductionOutcome legendre_bound(const ContinuedFraction& cf, const BigInt& M,
                                const CertifiedReal& A, const CertifiedReal& B_base) {
  require(A.is_positive(), A.upper_bound() <= 0, "A > 0");
  const CertifiedReal B_minus_one = B_base - 1;
  require(B_minus_one.is_positive(), B_minus_one.upper_bound() <= 0, "B > 1");

  const Convergent last = first_convergent_exceeding(cf, M);
  const auto& a = cf.quotients();
  const BigInt a_max = *std::max_element(a.begin(), a.begin() + last.index + 1);

  const unsigned digits = A.precision_digits();
  const CertifiedReal threshold =
      log(CertifiedReal::from_integer(a_max + 2, digits) * A * M) / log(B_base);

  Certificate cert;
  cert.method = "legendre";
  cert.convergent_index = last.index;
  cert.q = last.q;
  cert.max_partial_quotient = a_max;
  cert.threshold = threshold;
  return ReductionOutcome::bound(threshold.strict_integer_bound(), cert);
}

}  // namespace tlpal
