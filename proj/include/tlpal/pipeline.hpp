#pragma once

// End-to-end replay: low-range search, initial bounds, three reduction
// rounds and the final comparison with the searched range.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlpal/baker.hpp"
#include "tlpal/config.hpp"
#include "tlpal/continued_fraction.hpp"
#include "tlpal/lattice.hpp"
#include "tlpal/pattern.hpp"
#include "tlpal/recurrence.hpp"
#include "tlpal/reduction.hpp"

namespace tlpal {

/// Everything that depends on the working precision.
struct NumericContext {
  unsigned digits = 0;
  DominantRoot root;
  CertifiedReal log10;
  /// log 10 / log alpha
  CertifiedReal kappa;
  ContinuedFraction cf;

  static NumericContext build(unsigned digits, std::size_t cf_terms = 200);
};

/// Digit data of one reduction case; unused fields are zero (d2 = -1).
struct DigitCase {
  int d1 = 0;
  int d2 = -1;
  unsigned long ell = 0;
  unsigned long m = 0;
};

struct CaseOutcome {
  DigitCase digits;
  ReductionOutcome outcome;
};

/// Aggregate over a family of cases.
struct SweepSummary {
  std::size_t cases = 0;
  long max_bound = 0;
  std::optional<CaseOutcome> max_bound_case;
  std::optional<CaseOutcome> min_epsilon_case;
  std::map<std::size_t, std::size_t> convergent_usage;
  std::vector<CaseOutcome> failures;

  void add(const CaseOutcome& c);
  void merge(const SweepSummary& other);
  /// The smallest certified epsilon, if any case produced one.
  std::optional<CertifiedReal> min_epsilon() const;
};

struct Round1Result {
  std::vector<CaseOutcome> dp_cases;
  /// d1 = 9, where mu = 0.
  CaseOutcome legendre;
  SweepSummary summary;
  long ell_max = 0;
  bool conclusive = false;
};

/// (d1, d2, l) = (1, 0, 1), where mu = 0 in the second round.
struct DegenerateBranch {
  DigitCase digits{1, 0, 1, 0};
  BigInt X1;
  BigInt X2;
  LatticeBound configured;
  /// First enlarged C meeting the lattice condition, when the configured one
  /// does not.
  std::optional<LatticeBound> enlarged;
  std::optional<long> lll_m_bound;
  ReductionOutcome legendre;
  std::optional<long> m_bound;
};

struct Round2Result {
  std::vector<CaseOutcome> dp_cases;
  SweepSummary summary;
  DegenerateBranch degenerate;
  long m_max = 0;
  bool conclusive = false;
};

struct Round3Result {
  struct PairAggregate {
    int d1 = 0;
    int d2 = 0;
    SweepSummary summary;
  };
  std::vector<PairAggregate> pairs;
  SweepSummary summary;
  long n_max = 0;
  bool conclusive = false;
};

/// A computed quantity set against a fixed reference value.
struct ReferenceCheck {
  std::string name;
  std::string computed;
  std::string relation;
  std::string reference;
  bool holds = false;
};

enum class Verdict { verified, inconclusive };

struct VerificationReport {
  PipelineConfig config;
  std::vector<PatternSolution> solutions;
  std::optional<InitialBounds> initial;
  std::optional<Round1Result> round1;
  std::optional<Round2Result> round2;
  std::optional<Round3Result> round3;
  std::optional<long> final_n_bound;
  Verdict verdict = Verdict::inconclusive;
  unsigned precision_digits_used = 0;
  std::vector<ReferenceCheck> reference_checks;
  std::vector<std::string> notes;
  std::string timestamp;
};

/// The solution set the reductions are expected to leave: S(8) = 131.
std::vector<PatternSolution> expected_solutions();

/// X = d1 10^l - (d1 - d2), so that 9 N = X 10^(l+m) + (d1 - d2) 10^l - d1.
BigInt round2_eta_numerator(int d1, int d2, unsigned long ell);
/// Y = d1 10^(l+m) - (d1 - d2) 10^m + (d1 - d2), so that 9 N = Y 10^l - d1.
BigInt round3_eta_numerator(int d1, int d2, unsigned long ell, unsigned long m);

Round1Result run_round1(const NumericContext& ctx, const PipelineConfig& config,
                        const InitialBounds& initial);
Round2Result run_round2(const NumericContext& ctx, const PipelineConfig& config,
                        const InitialBounds& initial, long ell_max);
Round3Result run_round3(const NumericContext& ctx, const PipelineConfig& config, long ell_max,
                        long m_max);

enum class Stages : unsigned {
  search = 1,
  bounds = 2,
  reduce = 4,
  all = 7,
};

inline bool has_stage(Stages set, Stages s) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(s)) != 0;
}

/// Runs the selected stages. Reductions imply the initial bounds. Stages that
/// run out of precision are retried with doubled precision up to
/// config.max_precision_digits; anything still failing is recorded in the
/// report's notes and leaves the verdict inconclusive.
VerificationReport run_pipeline(const PipelineConfig& config, Stages stages);

/// All stages. Verified iff the low-range solutions are exactly S(8) = 131,
/// every reduction round is conclusive and the final bound on n lies inside
/// the searched range.
VerificationReport run_full(const PipelineConfig& config);

}  // namespace tlpal
