#include "tlpal/report.hpp"

#include <sstream>

namespace tlpal {

using nlohmann::json;

namespace {

json ball(const CertifiedReal& x) {
  return {{"mid", x.mid_string(20)}, {"rad", x.radius_string()}};
}

json digits_json(const DigitCase& c) {
  json j = {{"d1", c.d1}};
  if (c.d2 >= 0) j["d2"] = c.d2;
  if (c.ell > 0) j["ell"] = c.ell;
  if (c.m > 0) j["m"] = c.m;
  return j;
}

json certificate_json(const Certificate& c) {
  json j = {{"method", c.method}, {"convergents_tried", c.convergents_tried}};
  if (c.convergent_index) j["convergent_index"] = *c.convergent_index;
  if (c.q) j["q"] = c.q->get_str();
  if (c.epsilon) j["epsilon"] = ball(*c.epsilon);
  if (c.max_partial_quotient) j["max_partial_quotient"] = c.max_partial_quotient->get_str();
  if (c.threshold) j["threshold"] = ball(*c.threshold);
  return j;
}

json outcome_json(const ReductionOutcome& o) {
  json j = {{"kind", o.is_bound() ? "bound" : "failure"},
            {"certificate", certificate_json(o.certificate)}};
  if (o.bound_value) j["bound"] = o.bound_value->get_str();
  if (!o.is_bound()) j["reason"] = o.failure_reason;
  return j;
}

json case_json(const CaseOutcome& c) {
  json j = outcome_json(c.outcome);
  j["case"] = digits_json(c.digits);
  return j;
}

json summary_json(const SweepSummary& s) {
  json j = {{"cases", s.cases}, {"max_bound", s.max_bound}};
  if (s.max_bound_case) j["max_bound_case"] = case_json(*s.max_bound_case);
  if (s.min_epsilon_case) j["min_epsilon_case"] = case_json(*s.min_epsilon_case);
  json usage = json::object();
  for (const auto& [index, n] : s.convergent_usage) usage[std::to_string(index)] = n;
  j["convergent_usage"] = usage;
  json failures = json::array();
  for (const auto& f : s.failures) failures.push_back(case_json(f));
  j["failures"] = failures;
  return j;
}

json lattice_json(const LatticeBound& lb) {
  const auto vec = [](const Vec2& v) { return json::array({v.x.get_str(), v.y.get_str()}); };
  const auto rat = [](const Rational& q) {
    return CertifiedReal::from_rational(q, 30).mid_string(12);
  };
  json j = {{"C", lb.C.get_str()},
            {"reduced_v1", vec(lb.basis.v1)},
            {"reduced_v2", vec(lb.basis.v2)},
            {"d_lambda_sq", rat(lb.d_lambda_sq)},
            {"T", rat(lb.T)},
            {"T_sq_plus_X1_sq", rat(lb.required_sq)},
            {"condition_holds", lb.condition_holds}};
  if (lb.lower_bound) j["lower_bound"] = ball(*lb.lower_bound);
  return j;
}

json initial_json(const InitialBounds& b) {
  return {{"n_low", b.n_low},
          {"step1_magnitude", ball(b.step1_magnitude)},
          {"ell_bound_coeff", ball(b.ell_bound_coeff)},
          {"step2_a1_coeff", ball(b.step2_a1_coeff)},
          {"step2_magnitude", ball(b.step2_magnitude)},
          {"m_bound_coeff", ball(b.m_bound_coeff)},
          {"step3_length_coeff", ball(b.step3_length_coeff)},
          {"step3_a1_coeff", ball(b.step3_a1_coeff)},
          {"step3_magnitude", ball(b.step3_magnitude)},
          {"H", ball(b.H)},
          {"n_bound", b.n_bound.get_str()},
          {"two_ell_plus_m_bound", b.two_ell_plus_m_bound.get_str()}};
}

json config_json(const PipelineConfig& c) {
  return {{"n_low_max", c.n_low_max},
          {"precision_digits", c.precision_digits},
          {"max_precision_digits", c.max_precision_digits},
          {"M_round1", c.M_round1.get_str()},
          {"C_lll", c.C_lll.get_str()},
          {"output_format", to_string(c.output_format)},
          {"threads", c.threads}};
}

json rounds_json(const VerificationReport& r) {
  json rounds = json::object();
  if (r.round1) {
    const Round1Result& r1 = *r.round1;
    json cases = json::array();
    for (const auto& c : r1.dp_cases) cases.push_back(case_json(c));
    rounds["round1"] = {{"cases", cases},
                        {"legendre", case_json(r1.legendre)},
                        {"summary", summary_json(r1.summary)},
                        {"ell_max", r1.ell_max},
                        {"conclusive", r1.conclusive}};
  }
  if (r.round2) {
    const Round2Result& r2 = *r.round2;
    const DegenerateBranch& br = r2.degenerate;
    json deg = {{"case", digits_json(br.digits)},
                {"X1", br.X1.get_str()},
                {"X2", br.X2.get_str()},
                {"lattice_configured", lattice_json(br.configured)},
                {"legendre", outcome_json(br.legendre)}};
    if (br.enlarged) deg["lattice_enlarged"] = lattice_json(*br.enlarged);
    if (br.lll_m_bound) deg["lattice_m_bound"] = *br.lll_m_bound;
    if (br.m_bound) deg["m_bound"] = *br.m_bound;
    rounds["round2"] = {{"summary", summary_json(r2.summary)},
                        {"degenerate", deg},
                        {"m_max", r2.m_max},
                        {"conclusive", r2.conclusive}};
  }
  if (r.round3) {
    const Round3Result& r3 = *r.round3;
    json pairs = json::array();
    for (const auto& p : r3.pairs) {
      json pj = {{"d1", p.d1}, {"d2", p.d2}, {"cases", p.summary.cases},
                 {"max_bound", p.summary.max_bound}};
      if (auto e = p.summary.min_epsilon()) pj["min_epsilon"] = ball(*e);
      pj["failures"] = p.summary.failures.size();
      pairs.push_back(pj);
    }
    rounds["round3"] = {{"summary", summary_json(r3.summary)},
                        {"pairs", pairs},
                        {"n_max", r3.n_max},
                        {"conclusive", r3.conclusive}};
  }
  return rounds;
}

std::string sci(const BigInt& z) { return CertifiedReal::from_integer(z, 30).mid_string(3); }

std::string line_for(const CaseOutcome& c) {
  std::ostringstream os;
  os << "d1=" << c.digits.d1;
  if (c.digits.d2 >= 0) os << " d2=" << c.digits.d2;
  if (c.digits.ell > 0) os << " l=" << c.digits.ell;
  if (c.digits.m > 0) os << " m=" << c.digits.m;
  const ReductionOutcome& o = c.outcome;
  if (o.is_bound()) {
    os << ": bound " << o.bound_value->get_str() << " (" << o.certificate.method;
    if (o.certificate.convergent_index) os << ", convergent " << *o.certificate.convergent_index;
    if (o.certificate.epsilon) os << ", eps " << o.certificate.epsilon->mid_string(8);
    if (o.certificate.max_partial_quotient) {
      os << ", a(M) " << o.certificate.max_partial_quotient->get_str();
    }
    if (o.certificate.threshold) os << ", threshold " << o.certificate.threshold->mid_string(8);
    os << ")";
  } else {
    os << ": FAILED, " << o.failure_reason;
  }
  return os.str();
}

void summary_text(std::ostream& os, const SweepSummary& s) {
  os << "  cases: " << s.cases << ", failures: " << s.failures.size() << "\n";
  if (s.max_bound_case) os << "  largest bound: " << line_for(*s.max_bound_case) << "\n";
  if (s.min_epsilon_case) os << "  smallest eps:  " << line_for(*s.min_epsilon_case) << "\n";
  if (!s.convergent_usage.empty()) {
    os << "  convergents used:";
    for (const auto& [index, n] : s.convergent_usage) os << " " << index << "x" << n;
    os << "\n";
  }
  for (const auto& f : s.failures) os << "  " << line_for(f) << "\n";
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::verified ? "verified" : "inconclusive"; }

json to_json(const VerificationReport& r) {
  json j;
  j["config"] = config_json(r.config);
  json sols = json::array();
  for (const auto& s : r.solutions) {
    sols.push_back({{"n", s.n},
                    {"d1", s.params.d1},
                    {"d2", s.params.d2},
                    {"ell", s.params.ell},
                    {"m", s.params.m},
                    {"value", compose_digits(s.params)}});
  }
  j["solutions"] = sols;
  j["initial_bounds"] = r.initial ? initial_json(*r.initial) : json(nullptr);
  j["rounds"] = rounds_json(r);
  j["final_n_bound"] = r.final_n_bound ? json(*r.final_n_bound) : json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["precision_digits_used"] = r.precision_digits_used;
  json checks = json::array();
  for (const auto& c : r.reference_checks) {
    checks.push_back({{"name", c.name},
                      {"computed", c.computed},
                      {"relation", c.relation},
                      {"reference", c.reference},
                      {"holds", c.holds}});
  }
  j["reference_checks"] = checks;
  j["notes"] = r.notes;
  j["timestamp"] = r.timestamp;
  return j;
}

std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "Tribonacci-Lucas palindromic repdigit concatenations\n";
  os << "n_low_max = " << r.config.n_low_max;
  if (r.precision_digits_used > 0) os << ", precision = " << r.precision_digits_used << " digits";
  os << "\n\n";

  os << "Low-range search (0 <= n <= " << r.config.n_low_max << "):\n";
  if (r.solutions.empty()) os << "  none\n";
  for (const auto& s : r.solutions) {
    os << "  S(" << s.n << ") = " << compose_digits(s.params) << "  " << to_string(s.params)
       << "\n";
  }

  if (r.initial) {
    const InitialBounds& b = *r.initial;
    os << "\nInitial bounds (Matveev lower bound, three applications, n > " << b.n_low << "):\n";
    os << "  step 1: log|Gamma1| > -" << b.step1_magnitude.mid_string(6) << " (1 + log n)\n";
    os << "  step 2: log|Gamma2| > -" << b.step2_magnitude.mid_string(6) << " (1 + log n)^2\n";
    os << "  step 3: log|Gamma3| > -" << b.step3_magnitude.mid_string(6) << " (1 + log n)^3\n";
    os << "  n < H (log n)^3 with H = " << b.H.mid_string(6) << "\n";
    os << "  shaving lemma (r = 3): n < " << b.n_bound.get_str() << "\n";
    os << "  length relation: 2l + m < " << b.two_ell_plus_m_bound.get_str() << "\n";
  }

  if (r.round1) {
    os << "\nRound 1 (Baker-Davenport on l, M = " << sci(r.config.M_round1) << "):\n";
    for (const auto& c : r.round1->dp_cases) os << "  " << line_for(c) << "\n";
    os << "  Legendre criterion, " << line_for(r.round1->legendre) << "\n";
    os << "  => l <= " << r.round1->ell_max << "\n";
  }
  if (r.round2) {
    const Round2Result& r2 = *r.round2;
    os << "\nRound 2 (Baker-Davenport on m, l <= " << r.round1->ell_max << "):\n";
    summary_text(os, r2.summary);
    const DegenerateBranch& br = r2.degenerate;
    os << "  degenerate case d1=1 d2=0 l=1 (mu = 0):\n";
    os << "    lattice reduction at C = " << sci(br.configured.C)
       << ": condition d^2 >= T^2 + X1^2 "
       << (br.configured.condition_holds ? "holds" : "fails") << "\n";
    if (br.enlarged) {
      os << "    enlarged C = " << sci(br.enlarged->C)
         << ": lower bound " << br.enlarged->lower_bound->mid_string(6) << "\n";
    }
    if (br.lll_m_bound) os << "    lattice route: m <= " << *br.lll_m_bound << "\n";
    os << "    Legendre criterion: "
       << (br.legendre.is_bound() ? "m <= " + br.legendre.bound_value->get_str()
                                  : "failed, " + br.legendre.failure_reason)
       << "\n";
    os << "  => m <= " << r2.m_max << "\n";
  }
  if (r.round3) {
    os << "\nRound 3 (Baker-Davenport on n, l <= " << r.round1->ell_max
       << ", m <= " << r.round2->m_max << "):\n";
    summary_text(os, r.round3->summary);
    os << "  => n <= " << r.round3->n_max << "\n";
  }

  if (!r.reference_checks.empty()) {
    os << "\nReference values:\n";
    for (const auto& c : r.reference_checks) {
      os << "  [" << (c.holds ? "ok" : "differs") << "] " << c.name << ": " << c.computed << " "
         << c.relation << " " << c.reference << "\n";
    }
  }
  if (!r.notes.empty()) {
    os << "\nNotes:\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
  }
  if (r.final_n_bound) os << "\nFinal bound: n <= " << *r.final_n_bound << "\n";
  os << "Verdict: " << to_string(r.verdict) << "\n";
  return os.str();
}

std::string render(const VerificationReport& r, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(r).dump(2) + "\n";
  return render_text(r);
}

}  // namespace tlpal
