// Acceptance criteria. Prints one [PASS]/[FAIL] line per criterion, with the
// individual checks indented below it. `--only N` runs a single criterion.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tlpal/pipeline.hpp"
#include "tlpal/report.hpp"

using namespace tlpal;

namespace {

struct Check {
  std::string what;
  bool ok;
};

using Checks = std::vector<Check>;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Check runtime(const Stopwatch& w, double limit) {
  return {"runtime " + fmt(w.seconds()) + " s < " + fmt(limit) + " s", w.seconds() < limit};
}

CertifiedReal dec(const char* s, unsigned digits) { return CertifiedReal::from_decimal(s, digits); }

Checks ac1() {
  Stopwatch w;
  const VerificationReport r = run_pipeline(PipelineConfig{}, Stages::search);
  Checks out;
  out.push_back({"exactly one solution for n <= 500", r.solutions.size() == 1});
  if (r.solutions.size() == 1) {
    const PatternSolution& s = r.solutions[0];
    out.push_back({"n = 8, (d1,d2,l,m) = (1,3,1,1)", s == PatternSolution{8, {1, 3, 1, 1}}});
    out.push_back({"value 131", compose(s.params) == 131 && trib_lucas(8) == 131});
  }
  out.push_back(runtime(w, 10));
  return out;
}

Checks ac2() {
  Stopwatch w;
  const unsigned P = kDefaultPrecisionDigits;
  const DominantRoot root = dominant_root(P);
  Checks out;
  out.push_back({"alpha in (1.83, 1.84)",
                 certainly_less(dec("1.83", P), root.alpha) &&
                     certainly_less(root.alpha, dec("1.84", P))});
  const CertifiedReal residual = abs(characteristic_polynomial(root.alpha));
  out.push_back({"|alpha^3 - alpha^2 - alpha - 1| < 10^-" + std::to_string(P / 2),
                 residual.upper_bound() < Rational(1) / Rational(pow10(P / 2))});
  out.push_back({"alpha^(m-1) <= S(m) < alpha^(m+1) for m <= 1000",
                 first_growth_bounds_failure(1000, P) == 0});
  out.push_back({"|S(n) - alpha^n| <= 2 alpha^(-n/2) for n <= 1000",
                 first_binet_residual_failure(1000, P) == 0});
  out.push_back(runtime(w, 30));
  return out;
}

Checks ac3() {
  Stopwatch w;
  const NumericContext ctx = NumericContext::build(250);
  const long prefix[] = {3, 1, 3, 1, 1, 14, 1, 3, 3, 6, 1, 13, 3, 4, 2,
                         1, 1, 2, 3, 3, 2, 2, 1, 2, 5, 1, 1, 39, 2, 1};
  bool same = ctx.cf.size() >= 30;
  for (std::size_t i = 0; same && i < 30; ++i) same = ctx.cf.quotients()[i] == prefix[i];
  Checks out;
  out.push_back({"first 30 partial quotients", same});
  const bool has98 = ctx.cf.convergents().size() > 98;
  out.push_back({"q_98 = 10439083718875559984715310681234336679649552673602845",
                 has98 && ctx.cf.convergents()[98].q ==
                              BigInt("10439083718875559984715310681234336679649552673602845", 10)});
  out.push_back({"p_98 = 39444948689252707738489528190760067813905266021850462",
                 has98 && ctx.cf.convergents()[98].p ==
                              BigInt("39444948689252707738489528190760067813905266021850462", 10)});
  out.push_back(runtime(w, 60));
  return out;
}

Checks ac4() {
  Stopwatch w;
  const InitialBounds b = derive_initial_bounds(dominant_root(250), 500);
  const unsigned P = 250;
  const auto le = [&](const char* label, const CertifiedReal& x, const char* ref) {
    return Check{std::string(label) + " " + x.mid_string(6) + " <= " + ref,
                 certainly_less_equal(x, dec(ref, P))};
  };
  Checks out;
  out.push_back(le("step 1 magnitude", b.step1_magnitude, "7.17e13"));
  out.push_back(le("step 2 magnitude", b.step2_magnitude, "1.55e28"));
  out.push_back(le("step 3 magnitude", b.step3_magnitude, "5.13e42"));
  out.push_back({"n bound " + b.n_bound.get_str() + " <= 6.6e50", b.n_bound <= 66 * pow10(49)});
  out.push_back({"2l + m bound " + b.two_ell_plus_m_bound.get_str() + " <= 1.8e50",
                 b.two_ell_plus_m_bound <= 18 * pow10(49)});
  out.push_back(runtime(w, 5));
  return out;
}

Checks ac5() {
  Stopwatch w;
  const PipelineConfig config;
  const NumericContext ctx = NumericContext::build(config.precision_digits);
  const InitialBounds ib = derive_initial_bounds(ctx.root, config.n_low_max);
  const Round1Result r = run_round1(ctx, config, ib);
  Checks out;
  const auto eps = r.summary.min_epsilon();
  out.push_back({"eps_min " + (eps ? eps->mid_string(12) : std::string("none")) +
                     " certified > 0",
                 eps && eps->is_positive()});
  out.push_back({"all d1 conclusive", r.conclusive});
  out.push_back({"l <= " + std::to_string(r.ell_max) + " <= 56", r.conclusive && r.ell_max <= 56});
  const auto& a = r.legendre.outcome.certificate.max_partial_quotient;
  out.push_back({"a(M) = " + (a ? a->get_str() : std::string("none")) + " = 44", a && *a == 44});
  out.push_back(runtime(w, 120));
  return out;
}

Checks ac6() {
  Stopwatch w;
  const PipelineConfig config;
  const NumericContext ctx = NumericContext::build(config.precision_digits);
  const InitialBounds ib = derive_initial_bounds(ctx.root, config.n_low_max);
  const Round1Result r1 = run_round1(ctx, config, ib);
  const Round2Result r2 = run_round2(ctx, config, ib, r1.ell_max);
  Checks out;
  out.push_back({"cases " + std::to_string(r2.summary.cases) + ", failures " +
                     std::to_string(r2.summary.failures.size()),
                 r2.summary.failures.empty()});
  out.push_back({"m <= " + std::to_string(r2.summary.max_bound) + " <= 58 over the DP cases",
                 r2.summary.failures.empty() && r2.summary.max_bound <= 58});
  const auto eps = r2.summary.min_epsilon();
  out.push_back({"eps_min " + (eps ? eps->mid_string(12) : std::string("none")) +
                     " certified > 0",
                 eps && eps->is_positive()});

  // Lattice branch of the degenerate case at the configured C with the
  // reference box X1 = 1.8e50, X2 = 6.6e50.
  const BigInt X1 = 18 * pow10(49), X2 = 66 * pow10(49);
  const LatticeBound lb = lattice_lower_bound(ctx.log10, ctx.root.log_alpha, X1, X2, config.C_lll);
  const auto show = [](const Rational& q) {
    return CertifiedReal::from_rational(q, 30).mid_string(3);
  };
  out.push_back({"C = 1e110: d^2 = " + show(lb.d_lambda_sq) + " >= T^2 + X1^2 = " +
                     show(lb.required_sq),
                 lb.condition_holds});
  const bool positive = lb.lower_bound && lb.lower_bound->is_positive();
  out.push_back({"lattice lower bound " +
                     (lb.lower_bound ? lb.lower_bound->mid_string(6) : std::string("none")) +
                     " certified >= 5e-5",
                 positive && certainly_less_equal(dec("5e-5", ctx.digits), *lb.lower_bound)});
  const std::string m_text =
      positive ? lll_m_bound(*lb.lower_bound, 38).get_str() : std::string("none");
  out.push_back({"lattice m bound " + m_text + " <= 6",
                 positive && lll_m_bound(*lb.lower_bound, 38) <= 6});
  out.push_back({"degenerate branch bound m <= " +
                     (r2.degenerate.m_bound ? std::to_string(*r2.degenerate.m_bound)
                                            : std::string("none")),
                 r2.degenerate.m_bound.has_value() && *r2.degenerate.m_bound <= 58});
  out.push_back(runtime(w, 15 * 60));
  return out;
}

Checks ac7() {
  Stopwatch w;
  const VerificationReport r = run_full(PipelineConfig{});
  Checks out;
  const bool have = r.round3.has_value();
  out.push_back({"round 3 conclusive", have && r.round3->conclusive});
  out.push_back({"n <= " + (have ? std::to_string(r.round3->n_max) : std::string("?")) +
                     " <= 226",
                 have && r.round3->conclusive && r.round3->n_max <= 226});
  const auto eps = have ? r.round3->summary.min_epsilon() : std::nullopt;
  out.push_back({"eps_min " + (eps ? eps->mid_string(12) : std::string("none")) +
                     " certified > 0",
                 eps && eps->is_positive()});
  out.push_back({"verdict " + to_string(r.verdict), r.verdict == Verdict::verified});
  out.push_back(runtime(w, 60 * 60));
  return out;
}

// Compact versions of the property suites.

bool dp_instance_sound(const DPInstance& inst, long bound) {
  const unsigned P = inst.kappa.precision_digits();
  for (long m = 0; m <= inst.M.get_si(); ++m) {
    const CertifiedReal x = inst.kappa * m + inst.mu;
    const auto n = x.nearest_integer();
    if (!n) return false;
    const CertifiedReal v = abs(x - CertifiedReal::from_integer(*n, P));
    if (v.contains_zero()) continue;
    if ((log(inst.A / v) / log(inst.B)).lower_bound() > bound + 1) return false;
  }
  return true;
}

Checks ac8() {
  Checks out;
  const unsigned P = 60;

  {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> small(2, 40), num(1, 500), M(20, 400);
    std::uniform_int_distribution<int> base(2, 12);
    int checked = 0, failures = 0;
    for (int attempt = 0; attempt < 3000 && checked < 200; ++attempt) {
      const long a = small(rng), b = small(rng);
      if (a == b) continue;
      const CertifiedReal lb = log(CertifiedReal::from_int(b, P));
      const CertifiedReal kappa = log(CertifiedReal::from_int(a, P)) / lb;
      const ContinuedFraction cf = cf_expand(kappa, 40);
      if (cf.stop_reason() != ContinuedFraction::Stop::max_terms) continue;
      const DPInstance inst{kappa,
                            log(CertifiedReal::from_rational(Rational(num(rng), num(rng)), P)) / lb,
                            CertifiedReal::from_int(small(rng), P),
                            CertifiedReal::from_int(base(rng), P), BigInt(M(rng))};
      ReductionOutcome r;
      try {
        r = baker_davenport_reduce(inst, cf);
      } catch (const std::exception&) {
        continue;
      }
      if (!r.is_bound()) continue;
      if (!dp_instance_sound(inst, r.bound_value->get_si())) ++failures;
      ++checked;
    }
    out.push_back({"reduction oracle: " + std::to_string(checked) + " instances, " +
                       std::to_string(failures) + " failures",
                   checked >= 200 && failures == 0});
  }

  {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> entry(-25, 25);
    int checked = 0, failures = 0;
    while (checked < 200) {
      const Lattice2D l{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
      const BigInt det = abs(l.determinant());
      if (det == 0) continue;
      BigInt e = 0;
      for (const BigInt& v : {l.b1.x, l.b1.y, l.b2.x, l.b2.y}) e = std::max(e, BigInt(abs(v)));
      BigInt len;
      const BigInt n1 = std::min(norm_sq(l.b1), norm_sq(l.b2));
      mpz_sqrt(len.get_mpz_t(), n1.get_mpz_t());
      const long range = BigInt(2 * e * (len + 1) / det + 1).get_si();
      if (range > 120) continue;
      BigInt best = -1;
      for (long c1 = -range; c1 <= range; ++c1)
        for (long c2 = -range; c2 <= range; ++c2) {
          if (c1 == 0 && c2 == 0) continue;
          const BigInt n = norm_sq({c1 * l.b1.x + c2 * l.b2.x, c1 * l.b1.y + c2 * l.b2.y});
          if (best < 0 || n < best) best = n;
        }
      if (norm_sq(gauss_reduce(l).v1) != best) ++failures;
      ++checked;
    }
    out.push_back({"shortest-vector oracle: " + std::to_string(checked) + " lattices, " +
                       std::to_string(failures) + " failures",
                   failures == 0});
  }

  {
    int failures = 0, count = 0;
    for (int d1 = 1; d1 <= 9; ++d1)
      for (int d2 = 0; d2 <= 9; ++d2) {
        if (d1 == d2) continue;
        for (unsigned long ell = 1; ell <= 30; ++ell)
          for (unsigned long m = 1; m <= 30; ++m) {
            const PatternParams p{d1, d2, ell, m};
            const BigInt n = compose(p);
            if (recognize(n) != p || n != BigInt(compose_digits(p), 10)) ++failures;
            ++count;
          }
      }
    out.push_back({"compose/recognize round-trip: " + std::to_string(count) + " cases, " +
                       std::to_string(failures) + " failures",
                   failures == 0});
  }

  {
    const NumericContext ctx = NumericContext::build(250);
    const auto& c = ctx.cf.convergents();
    int failures = 0;
    for (std::size_t k = 1; k < c.size(); ++k) {
      const BigInt det = c[k].p * c[k - 1].q - c[k - 1].p * c[k].q;
      if (det != ((k % 2 == 1) ? 1 : -1)) ++failures;
    }
    out.push_back({"convergent determinant identity: " + std::to_string(c.size()) +
                       " convergents, " + std::to_string(failures) + " failures",
                   failures == 0 && c.size() > 100});
  }
  return out;
}

Checks ac9() {
  PipelineConfig one;
  one.threads = 1;
  PipelineConfig many;
  many.threads = 4;
  nlohmann::json a = to_json(run_full(one));
  nlohmann::json b = to_json(run_full(many));
  a.erase("timestamp");
  b.erase("timestamp");
  a["config"].erase("threads");
  b["config"].erase("threads");
  return {{"two verify runs (1 and 4 threads) give identical reports", a == b}};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 1;
    }
  }

  const std::vector<std::pair<std::string, std::function<Checks()>>> criteria = {
      {"low-range search", ac1},
      {"root certification", ac2},
      {"continued fraction of log 10 / log alpha", ac3},
      {"Matveev constants and initial bounds", ac4},
      {"round 1 reduction", ac5},
      {"round 2 reduction and degenerate branch", ac6},
      {"round 3 reduction and verdict", ac7},
      {"property suites", ac8},
      {"determinism", ac9},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    Checks checks;
    try {
      checks = criteria[i].second();
    } catch (const std::exception& e) {
      checks.push_back({std::string("exception: ") + e.what(), false});
    }
    bool ok = !checks.empty();
    for (const Check& c : checks) ok = ok && c.ok;
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << criteria[i].first << "\n";
    for (const Check& c : checks) std::cout << "    " << (c.ok ? "ok   " : "FAIL ") << c.what << "\n";
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
