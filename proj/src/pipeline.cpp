#include "tlpal/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <stdexcept>
#include <thread>

namespace tlpal {

namespace {

unsigned worker_count(const PipelineConfig& config) {
  if (config.threads != 0) return config.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Calls fn(i) for i in [0, count). The exception of the lowest failing index
// is rethrown, so failures do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

long to_long(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("bound does not fit in a long: " + z.get_str());
  return z.get_si();
}

CertifiedReal log_ratio(const BigInt& numerator, const NumericContext& ctx) {
  const CertifiedReal x = CertifiedReal::from_rational(Rational(numerator, 9), ctx.digits);
  return log(x) / ctx.root.log_alpha;
}

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Reruns fn with doubled precision while it runs out of digits.
template <class Fn>
auto run_stage(const char* name, NumericContext& ctx, const PipelineConfig& config,
               std::vector<std::string>& notes, Fn fn) {
  for (;;) {
    try {
      return fn(ctx);
    } catch (const PrecisionExhausted& e) {
      if (ctx.digits >= config.max_precision_digits) throw;
      const unsigned next = std::min(ctx.digits * 2, config.max_precision_digits);
      notes.push_back(std::string(name) + ": " + e.what() + "; retrying with " +
                      std::to_string(next) + " digits");
      ctx = NumericContext::build(next);
    }
  }
}

ReferenceCheck check_at_most(std::string name, const CertifiedReal& v, const char* reference) {
  const CertifiedReal ref = CertifiedReal::from_decimal(reference, v.precision_digits());
  return {std::move(name), v.mid_string(12), "<=", reference, certainly_less_equal(v, ref)};
}

ReferenceCheck check_above(std::string name, const CertifiedReal& v, const char* reference) {
  const CertifiedReal ref = CertifiedReal::from_decimal(reference, v.precision_digits());
  return {std::move(name), v.mid_string(12), ">", reference, certainly_less(ref, v)};
}

ReferenceCheck check_integer(std::string name, const BigInt& v, const char* relation,
                             const BigInt& reference) {
  const std::string rel = relation;
  bool holds = false;
  if (rel == "<=") holds = v <= reference;
  else if (rel == "==") holds = v == reference;
  else throw std::invalid_argument("relation " + rel);
  return {std::move(name), v.get_str(), rel, reference.get_str(), holds};
}

}  // namespace

NumericContext NumericContext::build(unsigned digits, std::size_t cf_terms) {
  NumericContext ctx;
  ctx.digits = digits;
  ctx.root = dominant_root(digits);
  ctx.log10 = log(CertifiedReal::from_int(10, digits));
  ctx.kappa = ctx.log10 / ctx.root.log_alpha;
  ctx.cf = cf_expand(ctx.kappa, cf_terms);
  return ctx;
}

void SweepSummary::add(const CaseOutcome& c) {
  ++cases;
  const ReductionOutcome& o = c.outcome;
  if (!o.is_bound()) {
    failures.push_back(c);
    return;
  }
  const long b = to_long(*o.bound_value);
  if (!max_bound_case || b > max_bound) {
    max_bound = b;
    max_bound_case = c;
  }
  if (o.certificate.epsilon) {
    if (!min_epsilon_case ||
        o.certificate.epsilon->lower_bound() <
            min_epsilon_case->outcome.certificate.epsilon->lower_bound()) {
      min_epsilon_case = c;
    }
  }
  if (o.certificate.convergent_index) ++convergent_usage[*o.certificate.convergent_index];
}

void SweepSummary::merge(const SweepSummary& other) {
  cases += other.cases;
  if (other.max_bound_case && (!max_bound_case || other.max_bound > max_bound)) {
    max_bound = other.max_bound;
    max_bound_case = other.max_bound_case;
  }
  if (other.min_epsilon_case &&
      (!min_epsilon_case || other.min_epsilon_case->outcome.certificate.epsilon->lower_bound() <
                                min_epsilon_case->outcome.certificate.epsilon->lower_bound())) {
    min_epsilon_case = other.min_epsilon_case;
  }
  for (const auto& [index, n] : other.convergent_usage) convergent_usage[index] += n;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::optional<CertifiedReal> SweepSummary::min_epsilon() const {
  if (!min_epsilon_case) return std::nullopt;
  return min_epsilon_case->outcome.certificate.epsilon;
}

std::vector<PatternSolution> expected_solutions() { return {{8, {1, 3, 1, 1}}}; }

BigInt round2_eta_numerator(int d1, int d2, unsigned long ell) {
  return BigInt(d1) * pow10(ell) - (d1 - d2);
}

BigInt round3_eta_numerator(int d1, int d2, unsigned long ell, unsigned long m) {
  return BigInt(d1) * pow10(ell + m) - BigInt(d1 - d2) * pow10(m) + (d1 - d2);
}

Round1Result run_round1(const NumericContext& ctx, const PipelineConfig& config,
                        const InitialBounds& initial) {
  (void)initial;
  Round1Result out;
  const CertifiedReal A = CertifiedReal::from_int(56, ctx.digits) / ctx.root.log_alpha;
  const CertifiedReal B = CertifiedReal::from_int(10, ctx.digits);

  out.dp_cases.resize(8);
  parallel_for(8, worker_count(config), [&](std::size_t i) {
    const int d1 = static_cast<int>(i) + 1;
    DPInstance inst{ctx.kappa, log_ratio(d1, ctx), A, B, config.M_round1};
    out.dp_cases[i] = {{d1, -1, 0, 0}, baker_davenport_reduce(inst, ctx.cf)};
  });
  for (const CaseOutcome& c : out.dp_cases) out.summary.add(c);

  // d1 = 9 makes mu vanish: |(2l + m) kappa - n| < A 10^-l.
  out.legendre = {{9, -1, 0, 0}, legendre_bound(ctx.cf, config.M_round1, A, B)};
  out.summary.add(out.legendre);

  out.conclusive = out.summary.failures.empty();
  out.ell_max = std::max(out.summary.max_bound, 1L);
  return out;
}

Round2Result run_round2(const NumericContext& ctx, const PipelineConfig& config,
                        const InitialBounds& initial, long ell_max) {
  Round2Result out;
  const CertifiedReal A = CertifiedReal::from_int(38, ctx.digits) / ctx.root.log_alpha;
  const CertifiedReal B = CertifiedReal::from_int(10, ctx.digits);

  struct Job {
    int d1, d2;
    unsigned long ell;
  };
  std::vector<Job> jobs;
  bool have_degenerate = false;
  for (int d1 = 1; d1 <= 9; ++d1) {
    for (int d2 = 0; d2 <= 9; ++d2) {
      if (d1 == d2) continue;
      for (unsigned long ell = 1; ell <= static_cast<unsigned long>(ell_max); ++ell) {
        if (round2_eta_numerator(d1, d2, ell) == 9) {
          have_degenerate = true;
          continue;
        }
        jobs.push_back({d1, d2, ell});
      }
    }
  }

  out.dp_cases.resize(jobs.size());
  parallel_for(jobs.size(), worker_count(config), [&](std::size_t i) {
    const Job& j = jobs[i];
    DPInstance inst{ctx.kappa, log_ratio(round2_eta_numerator(j.d1, j.d2, j.ell), ctx), A, B,
                    config.M_round1};
    out.dp_cases[i] = {{j.d1, j.d2, j.ell, 0}, baker_davenport_reduce(inst, ctx.cf)};
  });
  for (const CaseOutcome& c : out.dp_cases) out.summary.add(c);
  out.conclusive = out.summary.failures.empty();

  if (have_degenerate) {
    // |(l + m) log 10 - n log alpha| < 38 / 10^m.
    DegenerateBranch& br = out.degenerate;
    br.X1 = initial.two_ell_plus_m_bound;
    br.X2 = initial.n_bound;
    br.configured = lattice_lower_bound(ctx.log10, ctx.root.log_alpha, br.X1, br.X2, config.C_lll);
    const LatticeBound* usable = br.configured.condition_holds ? &br.configured : nullptr;
    if (!usable) {
      BigInt C = config.C_lll;
      for (int step = 0; step < 30; ++step) {
        C *= pow10(10);
        LatticeBound lb = lattice_lower_bound(ctx.log10, ctx.root.log_alpha, br.X1, br.X2, C);
        if (lb.condition_holds) {
          br.enlarged = std::move(lb);
          usable = &*br.enlarged;
          break;
        }
      }
    }
    if (usable) br.lll_m_bound = to_long(lll_m_bound(*usable->lower_bound, 38));

    br.legendre = legendre_bound(ctx.cf, config.M_round1, A, B);
    std::optional<long> best = br.lll_m_bound;
    if (br.legendre.is_bound()) {
      const long v = to_long(*br.legendre.bound_value);
      best = best ? std::min(*best, v) : v;
    }
    br.m_bound = best;
    if (!best) out.conclusive = false;
  }

  long m_max = out.summary.max_bound;
  if (have_degenerate && out.degenerate.m_bound) m_max = std::max(m_max, *out.degenerate.m_bound);
  out.m_max = std::max(m_max, 1L);
  return out;
}

Round3Result run_round3(const NumericContext& ctx, const PipelineConfig& config, long ell_max,
                        long m_max) {
  Round3Result out;
  const CertifiedReal A = CertifiedReal::from_int(4, ctx.digits) / ctx.root.log_alpha;
  const CertifiedReal& B = ctx.root.alpha;

  for (int d1 = 1; d1 <= 9; ++d1) {
    for (int d2 = 0; d2 <= 9; ++d2) {
      if (d1 != d2) out.pairs.push_back({d1, d2, {}});
    }
  }
  parallel_for(out.pairs.size(), worker_count(config), [&](std::size_t i) {
    Round3Result::PairAggregate& pair = out.pairs[i];
    for (unsigned long ell = 1; ell <= static_cast<unsigned long>(ell_max); ++ell) {
      for (unsigned long m = 1; m <= static_cast<unsigned long>(m_max); ++m) {
        const BigInt Y = round3_eta_numerator(pair.d1, pair.d2, ell, m);
        DPInstance inst{ctx.kappa, log_ratio(Y, ctx), A, B, config.M_round1};
        pair.summary.add({{pair.d1, pair.d2, ell, m}, baker_davenport_reduce(inst, ctx.cf)});
      }
    }
  });
  for (const auto& pair : out.pairs) out.summary.merge(pair.summary);
  out.conclusive = out.summary.failures.empty() && out.summary.cases > 0;
  out.n_max = out.summary.max_bound;
  return out;
}

VerificationReport run_pipeline(const PipelineConfig& config, Stages stages) {
  config.validate();
  VerificationReport rep;
  rep.config = config;
  rep.timestamp = timestamp_now();
  auto& notes = rep.notes;

  if (has_stage(stages, Stages::search)) rep.solutions = search_low_range(config.n_low_max);

  const bool want_bounds = has_stage(stages, Stages::bounds) || has_stage(stages, Stages::reduce);
  if (!want_bounds) return rep;

  NumericContext ctx;
  try {
    ctx = with_precision_retry(config.precision_digits, config.max_precision_digits,
                               [](unsigned d) { return NumericContext::build(d); });
    rep.initial = run_stage("initial bounds", ctx, config, notes, [&](NumericContext& c) {
      return derive_initial_bounds(c.root, config.n_low_max);
    });
  } catch (const PrecisionExhausted& e) {
    notes.push_back(std::string("initial bounds: ") + e.what());
    rep.precision_digits_used = ctx.digits;
    return rep;
  }

  const InitialBounds& ib = *rep.initial;
  auto& checks = rep.reference_checks;
  checks.push_back(check_at_most("step 1 magnitude", ib.step1_magnitude, "7.17e13"));
  checks.push_back(check_at_most("step 2 magnitude", ib.step2_magnitude, "1.55e28"));
  checks.push_back(check_at_most("step 3 length coefficient", ib.step3_length_coeff, "3.13e28"));
  checks.push_back(check_at_most("step 3 magnitude", ib.step3_magnitude, "5.13e42"));
  checks.push_back(check_at_most("H", ib.H, "8.52e42"));
  checks.push_back(check_integer("n bound", ib.n_bound, "<=", parse_big_integer("66e49")));
  checks.push_back(check_integer("2l + m bound", ib.two_ell_plus_m_bound, "<=",
                                 parse_big_integer("18e49")));

  if (config.M_round1 < ib.two_ell_plus_m_bound) {
    notes.push_back("M = " + config.M_round1.get_str() + " is below the bound " +
                    ib.two_ell_plus_m_bound.get_str() + " on 2l + m; reductions are not valid");
  }

  if (has_stage(stages, Stages::reduce)) {
    try {
      rep.round1 = run_stage("round 1", ctx, config, notes, [&](NumericContext& c) {
        return run_round1(c, config, ib);
      });
      const long ell_max = rep.round1->ell_max;
      rep.round2 = run_stage("round 2", ctx, config, notes, [&](NumericContext& c) {
        return run_round2(c, config, ib, ell_max);
      });
      const long m_max = rep.round2->m_max;
      rep.round3 = run_stage("round 3", ctx, config, notes, [&](NumericContext& c) {
        return run_round3(c, config, ell_max, m_max);
      });
      rep.final_n_bound = rep.round3->n_max;
    } catch (const PrecisionExhausted& e) {
      notes.push_back(std::string("reduction: ") + e.what());
    }

    if (rep.round1) {
      const Round1Result& r1 = *rep.round1;
      if (auto e = r1.summary.min_epsilon()) {
        checks.push_back(check_above("round 1 min epsilon", *e, "0.00227519"));
      }
      checks.push_back(check_integer("round 1 bound on l", BigInt(r1.ell_max), "<=", 56));
      if (r1.legendre.outcome.certificate.max_partial_quotient) {
        checks.push_back(check_integer("round 1 a(M)",
                                       *r1.legendre.outcome.certificate.max_partial_quotient,
                                       "==", 44));
      }
    }
    if (rep.round2) {
      const Round2Result& r2 = *rep.round2;
      if (auto e = r2.summary.min_epsilon()) {
        checks.push_back(check_above("round 2 min epsilon", *e, "0.0000604124"));
      }
      checks.push_back(check_integer("round 2 bound on m", BigInt(r2.m_max), "<=", 58));
      const DegenerateBranch& br = r2.degenerate;
      checks.push_back({"lattice condition at configured C",
                        br.configured.condition_holds ? "holds" : "fails", "==", "holds",
                        br.configured.condition_holds});
      const bool small = br.configured.lower_bound &&
                         lll_m_bound(*br.configured.lower_bound, 38) <= 6;
      checks.push_back({"lattice bound on m at configured C",
                        br.configured.lower_bound
                            ? lll_m_bound(*br.configured.lower_bound, 38).get_str()
                            : "none",
                        "<=", "6", small});
    }
    if (rep.round3) {
      const Round3Result& r3 = *rep.round3;
      if (auto e = r3.summary.min_epsilon()) {
        checks.push_back(check_above("round 3 min epsilon", *e, "0.000000106965"));
      }
      checks.push_back(check_integer("round 3 bound on n", BigInt(r3.n_max), "<=", 226));
    }
  }
  rep.precision_digits_used = ctx.digits;

  const bool full = stages == Stages::all;
  const bool rounds_ok = rep.round1 && rep.round1->conclusive && rep.round2 &&
                         rep.round2->conclusive && rep.round3 && rep.round3->conclusive;
  const bool in_range =
      rep.final_n_bound && *rep.final_n_bound <= static_cast<long>(config.n_low_max);
  const bool hypotheses = config.M_round1 >= ib.two_ell_plus_m_bound;
  if (full && rounds_ok && !in_range) {
    notes.push_back("final bound n <= " + std::to_string(*rep.final_n_bound) +
                    " exceeds the searched range " + std::to_string(config.n_low_max));
  }
  if (full && rep.solutions != expected_solutions()) {
    notes.push_back("low-range solutions differ from the expected set");
  }
  rep.verdict = full && rounds_ok && in_range && hypotheses &&
                        rep.solutions == expected_solutions()
                    ? Verdict::verified
                    : Verdict::inconclusive;
  return rep;
}

VerificationReport run_full(const PipelineConfig& config) {
  return run_pipeline(config, Stages::all);
}

}  // namespace tlpal
