#include "fano/exclusion.hpp"

#include <mutex>
#include <sstream>

#include "fano/germ.hpp"
#include "fano/parallel.hpp"

namespace fano {

Comparison Comparison::make(const std::string& label, const Rat& lhs, const std::string& rel,
                            const Rat& rhs, bool strict_link) {
  Comparison c;
  c.label = label;
  c.lhs = lhs;
  c.rhs = rhs;
  c.rel = rel;
  c.strict = strict_link;
  if (rel == ">")
    c.holds = lhs > rhs;
  else if (rel == ">=")
    c.holds = lhs >= rhs;
  else if (rel == "<")
    c.holds = lhs < rhs;
  else if (rel == "<=")
    c.holds = lhs <= rhs;
  else if (rel == "==")
    c.holds = lhs == rhs;
  else
    throw std::invalid_argument("unknown relation " + rel);
  return c;
}

const char* outcome_name(CaseOutcome o) {
  switch (o) {
    case CaseOutcome::Excluded: return "excluded";
    case CaseOutcome::NotExcluded: return "not-excluded";
    case CaseOutcome::NotApplicable: return "not-applicable";
    case CaseOutcome::ExperimentalExcluded: return "excluded-experimental";
    case CaseOutcome::ExperimentalOpen: return "open-experimental";
  }
  return "?";
}

// ---- claims -----------------------------------------------------------------

namespace {

ConeRegion quadrant_st() {
  ConeRegion r;
  r.names = {"s", "t"};
  return r;
}

ConeRegion lower_dominates_region() {
  ConeRegion r;
  r.names = {"p0", "Sl", "Su"};
  LinForm g(3);  // Sl - p0 >= 0
  g.c[0] = -1;
  g.c[1] = 1;
  r.constraints.push_back(g);
  return r;
}

LinForm lin3(const Rat& a, const Rat& b, const Rat& c) {
  LinForm l(3);
  l.c[0] = a;
  l.c[1] = b;
  l.c[2] = c;
  return l;
}

// memo for the handful of claims the sweeps share
std::mutex cert_mutex;
std::map<std::string, Certificate> cert_cache;

Certificate verify_cached(const QuadraticRatioClaim& claim) {
  std::string key = claim.id + "|" + rat_str(claim.bound) + "|" + (claim.strict ? "s" : "n");
  {
    std::lock_guard<std::mutex> lock(cert_mutex);
    auto it = cert_cache.find(key);
    if (it != cert_cache.end()) return it->second;
  }
  Certificate cert = verify_ratio_bound(claim);
  std::lock_guard<std::mutex> lock(cert_mutex);
  cert_cache.emplace(key, cert);
  return cert;
}

}  // namespace

QuadraticRatioClaim prop7_claim(const Rat& bound) {
  QuadraticRatioClaim c;
  c.id = "prop7";
  c.region = quadrant_st();
  LinForm num(2);
  num.c = {Rat(2), Rat(1)};
  c.num = QuadForm::square(num);  // (2s + t)^2
  LinForm l1(2), l2(2);
  l1.c = {Rat(2), Rat(0)};
  l2.c = {rat(1, 2), Rat(1)};
  c.den = QuadForm::product(l1, l2);  // 2s (s/2 + t)
  c.bound = bound;
  c.strict = false;
  return c;
}

QuadraticRatioClaim prop8_claim(int mu, std::optional<Rat> bound) {
  if (mu < 3) throw std::invalid_argument("prop8 claim needs mu >= 3");
  QuadraticRatioClaim c;
  c.id = "prop8-mu" + std::to_string(mu);
  c.region = lower_dominates_region();
  c.num = QuadForm::product(lin3(rat(2 * (mu + 2), mu), Rat(1), Rat(0)),
                            lin3(rat(1, 2), Rat(1), Rat(1)));
  c.den = QuadForm::square(lin3(Rat(2), Rat(2), Rat(1)));
  c.bound = bound.value_or(Rat(1));
  c.strict = true;  // the paper's inequality is strict; it fails either way
  return c;
}

QuadraticRatioClaim prop8_reverse_claim(int mu) {
  QuadraticRatioClaim c = prop8_claim(mu);
  c.id = "prop8-reverse-mu" + std::to_string(mu);
  std::swap(c.num, c.den);
  c.bound = Rat(1);
  c.strict = false;
  return c;
}

QuadraticRatioClaim ratio_claim_T(const Rat& bound) {
  QuadraticRatioClaim c;
  c.id = "ratio-T";
  c.region = lower_dominates_region();
  c.num = QuadForm::square(lin3(Rat(2), Rat(2), Rat(1)));
  c.den = QuadForm::product(lin3(Rat(2), Rat(3), Rat(0)), lin3(rat(1, 2), Rat(1), Rat(1)));
  c.bound = bound;
  return c;
}

QuadraticRatioClaim ratio_claim_W_mu4(const Rat& bound) {
  QuadraticRatioClaim c = ratio_claim_T(bound);
  c.id = "ratio-W4";
  c.den = QuadForm::product(lin3(Rat(2), rat(8, 3), Rat(0)), lin3(rat(1, 2), Rat(1), Rat(1)));
  return c;
}

QuadraticRatioClaim ratio_claim_W_mu3(const Rat& bound) {
  QuadraticRatioClaim c = ratio_claim_T(bound);
  c.id = "ratio-W3";
  c.den = QuadForm::product(lin3(Rat(2), Rat(2), Rat(0)), lin3(rat(1, 2), Rat(1), Rat(1)));
  return c;
}

// ---- case operations --------------------------------------------------------

CaseResult exclude_smooth_center(int M, long n) {
  CaseResult r;
  r.case_id = "smooth-center";
  r.params = "M=" + std::to_string(M) + " n=" + std::to_string(n);
  if (M < 5 || n < 1) return r;
  Rat deg_z = Rat(M) * Rat(n) * Rat(n);
  Rat upper = rat(4, M) * deg_z;
  Rat four_n2 = Rat(4) * Rat(n) * Rat(n);
  r.checks.push_back(Comparison::make("(4/M) deg Z equals 4 n^2", upper, "==", four_n2));
  r.checks.push_back(
      Comparison::make("symbolic identity (4/M) M = 4", rat(4, M) * Rat(M), "==", Rat(4)));
  r.checks.push_back(Comparison::make("the maximal-singularity side needs mult > 4 n^2",
                                      four_n2, "==", four_n2, true));
  bool ok = r.checks[0].holds && r.checks[1].holds;
  r.outcome = ok ? CaseOutcome::Excluded : CaseOutcome::NotExcluded;
  r.contradiction = "mult_B Z > 4n^2 is incompatible with mult_B Z <= (4/M) deg Z = 4n^2";
  r.strictness_source = "Noether-Fano inequality (strict)";
  return r;
}

CaseResult exclude_low_mult_point(int M, int mu) {
  CaseResult r;
  r.case_id = "low-mult-point";
  r.params = "M=" + std::to_string(M) + " mu=" + std::to_string(mu);
  if (mu < 3 || mu > M - 3) return r;  // not applicable outside the regime
  Rat lhs = Rat(M - mu - 1) * Rat(M - mu - 1) * Rat(mu);
  auto cmp = Comparison::make("(M-mu-1)^2 mu > M", lhs, ">", Rat(M), true);
  r.checks.push_back(cmp);
  r.outcome = cmp.holds ? CaseOutcome::Excluded : CaseOutcome::NotExcluded;
  r.contradiction = "mult_x Z >= (M-mu-1)^2 n^2 mu > M n^2 = deg Z";
  r.strictness_source = "(M-mu-1)^2 mu > M";
  return r;
}

CaseResult exclude_L0(int mu, int M, std::optional<Rat> bound_override) {
  CaseResult r;
  r.case_id = "L0";
  r.params = "M=" + std::to_string(M) + " mu=" + std::to_string(mu);
  if (mu < 3 || M < mu + 3) return r;

  Rat bound = bound_override.value_or(Rat(3));
  Certificate cert = verify_cached(prop7_claim(bound));
  r.certificates.push_back(cert);
  if (!cert.satisfied) {
    r.outcome = CaseOutcome::NotExcluded;
    r.contradiction = "ratio bound " + rat_str(bound) + " on (2s+t)^2 / 2s(s/2+t) is violated";
    return r;
  }

  std::vector<int> tail;
  for (int i = mu + 2; i <= M - 1; ++i) tail.push_back(i);
  Rat chain = chain_factor(tail, mu, M);
  r.checks.push_back(
      Comparison::make("telescoping chain over {mu+2..M-1} equals M/(mu+2)", chain, "==",
                       rat(M, mu + 2)));
  // mult/deg Y > 3 mu / M, multiplied along the chain
  Rat final_ratio = rat(3 * mu, M) * chain;
  r.checks.push_back(Comparison::make("mult/deg of the full intersection exceeds 1", final_ratio,
                                      ">=", Rat(1), false));
  r.checks.push_back(Comparison::make("3mu/(mu+2) > 1", rat(3 * mu, mu + 2), ">", Rat(1), false));
  bool ok = r.checks[0].holds && r.checks[2].holds;
  r.outcome = ok ? CaseOutcome::Excluded : CaseOutcome::NotExcluded;
  r.contradiction = "an effective cycle would satisfy mult/deg = " + rat_str(rat(3 * mu, mu + 2)) +
                    " > 1";
  r.strictness_source = "Noether-Fano inequality via estimate (1)";
  return r;
}

CaseResult exclude_Y_equals_R(int mu, std::optional<Rat> bound_override) {
  CaseResult r;
  r.case_id = "Y-equals-R";
  r.params = "mu=" + std::to_string(mu);
  if (mu < 3) return r;

  Certificate stated = verify_cached(prop8_claim(mu, bound_override));
  Certificate reversed = verify_cached(prop8_reverse_claim(mu));
  r.certificates.push_back(stated);
  r.certificates.push_back(reversed);

  bool stated_fails = stated.verdict == ClaimVerdict::BoundFails;
  bool reversed_holds = reversed.satisfied;
  r.checks.push_back(Comparison::make("reverse inequality minimum gap is nonnegative",
                                      reversed.min_gap, ">=", Rat(0)));
  r.outcome = (stated_fails && reversed_holds) ? CaseOutcome::Excluded : CaseOutcome::NotExcluded;
  r.contradiction = "the Y = R inequality fails everywhere on { p0 <= Sl }";
  r.strictness_source = "refutation needs no strictness bookkeeping";
  if (reversed.ratio_min)
    r.checks.push_back(Comparison::make("worst slack of the reversed ratio", *reversed.ratio_min,
                                        ">=", Rat(1)));
  return r;
}

CaseResult lemma3_case(int mu, int M, std::optional<Rat> bound_override) {
  CaseResult r;
  r.case_id = "lemma3";
  r.params = "M=" + std::to_string(M) + " mu=" + std::to_string(mu);
  if (mu < 3 || M < mu + 2) return r;

  if (mu >= 4) {
    Rat bound = bound_override.value_or(rat(3, 2));
    Certificate cert = verify_cached(ratio_claim_W_mu4(bound));
    r.certificates.push_back(cert);
    if (!cert.satisfied) {
      r.outcome = CaseOutcome::NotExcluded;
      return r;
    }
    // (6): mult/deg Y > (3/(2M)) mu, strict; (7): mult/deg Y <= (mu+2)/M
    r.checks.push_back(Comparison::make("Eq. (6) lower bound (3/2) mu / M, strict",
                                        rat(3 * mu, 2 * M), ">=", rat(3 * mu, 2 * M), true));
    r.checks.push_back(Comparison::make("(3/2) mu >= mu + 2 closes the a = 0 case",
                                        rat(3 * mu, 2), ">=", Rat(mu + 2)));
    r.outcome = r.checks[1].holds ? CaseOutcome::Excluded : CaseOutcome::NotExcluded;
    r.contradiction = "(3/2) mu < mu + 2 would force mu < 4";
  } else {
    Rat bound = bound_override.value_or(Rat(2));
    Certificate cert = verify_cached(ratio_claim_W_mu3(bound));
    r.certificates.push_back(cert);
    if (!cert.satisfied) {
      r.outcome = CaseOutcome::NotExcluded;
      return r;
    }
    r.checks.push_back(
        Comparison::make("mult/deg Y > 6/M against (7): 6 >= mu + 2 = 5", Rat(6), ">=", Rat(5)));
    r.outcome = r.checks[0].holds ? CaseOutcome::Excluded : CaseOutcome::NotExcluded;
    r.contradiction = "6 < mu + 2 = 5 is false";
  }
  r.strictness_source = "estimate (1) is strict via the Noether-Fano inequality";
  return r;
}

CaseResult exclude_mu_ge_5(int mu, int M) {
  CaseResult r;
  r.case_id = "mu-ge-5";
  r.params = "M=" + std::to_string(M) + " mu=" + std::to_string(mu);
  if (mu < 4 || M < mu + 3) return r;

  Certificate cert = verify_cached(ratio_claim_T(rat(4, 3)));
  r.certificates.push_back(cert);
  if (!cert.satisfied) {
    r.outcome = CaseOutcome::NotExcluded;
    return r;
  }

  std::vector<int> idx = {mu};
  for (int i = mu + 3; i <= M - 1; ++i) idx.push_back(i);
  Rat chain = chain_factor(idx, mu, M);
  Rat formula = Rat(mu + 1) * Rat(M) / (Rat(mu) * Rat(mu + 3));
  formula.canonicalize();
  r.checks.push_back(Comparison::make(
      "chain over {mu} u {mu+3..M-1} equals (mu+1)M/(mu(mu+3))", chain, "==", formula));

  // strict (8) against (9): contradiction when (4/3) mu >= mu(mu+3)/(mu+1)
  Rat lhs = rat(4 * mu, 3);
  Rat rhs = Rat(mu) * Rat(mu + 3) / Rat(mu + 1);
  rhs.canonicalize();
  auto final_cmp = Comparison::make("(4/3) mu >= mu(mu+3)/(mu+1)", lhs, ">=", rhs, true);
  r.checks.push_back(final_cmp);
  if (lhs == rhs)
    r.strictness_source = "equality boundary; the contradiction is carried by strict Eq. (8) "
                          "(Noether-Fano)";
  else
    r.strictness_source = "Eq. (8), strict via the Noether-Fano inequality";
  bool ok = r.checks[0].holds && final_cmp.holds;
  r.outcome = ok ? CaseOutcome::Excluded : CaseOutcome::NotExcluded;
  r.contradiction = "mu(mu+3)/(mu+1) > (4/3) mu would force mu < 5";
  return r;
}

// ---- chain systems ----------------------------------------------------------

ChainSystem mu4_system(int mu, int M) {
  if (M < mu + 3) throw std::invalid_argument("chain system needs M >= mu + 3");
  ChainSystem s;
  s.mu = mu;
  s.M = M;
  s.depth = 1;
  s.sharpened_tails = false;
  s.lemma_coeff_T = rat(3, mu);
  s.lemma_coeff_W = mu >= 4 ? rat(8, 3 * mu) : rat(2, mu);

  Rat bound_plus(mu + 3, M);
  Rat bound_sharp = Rat(mu) * Rat(mu + 4) / (Rat(mu + 1) * Rat(M));
  bound_sharp.canonicalize();
  Rat elim = Rat(M) * Rat(mu + 1) / (Rat(mu) * Rat(mu + 4));
  elim.canonicalize();
  s.constants.push_back({"bound-plus-1", bound_plus});
  s.constants.push_back({"bound-sharp", bound_sharp});
  s.constants.push_back({"elimination-factor", elim});

  Rat justifier = Rat(mu + 1) * Rat(mu + 3) / (Rat(mu) * Rat(mu + 4));
  justifier.canonicalize();
  s.justifiers.push_back(Comparison::make(
      "delta-sharp elimination: (mu+1)(mu+3)/(mu(mu+4)) >= 1", justifier, ">=", Rat(1)));

  Rat t_sharp(mu + 4, mu + 2);
  Rat t_plus = Rat(mu + 3) * Rat(mu + 1) / (Rat(mu) * Rat(mu + 2));
  t_plus.canonicalize();
  s.branches.push_back({"sharp", t_sharp, "ratio-T"});
  s.branches.push_back({"plus-1", t_plus, mu >= 4 ? "ratio-W4" : "ratio-W3"});
  return s;
}

ChainSystem chain_system(int mu, int M, int depth, bool sharpen_tails) {
  if (depth < 1 || depth > 2) throw std::invalid_argument("chain depth must be 1 or 2");
  if (M < mu + 3) throw std::invalid_argument("chain system needs M >= mu + 3");
  ChainSystem s;
  s.mu = mu;
  s.M = M;
  s.depth = depth;
  s.sharpened_tails = sharpen_tails;
  s.lemma_coeff_T = rat(3, mu);
  s.lemma_coeff_W = mu >= 4 ? rat(8, 3 * mu) : rat(2, mu);
  const std::string w_claim = mu >= 4 ? "ratio-W4" : "ratio-W3";

  // tail bound for a codimension-c cycle: intersect with D_{mu+c}..D_{M-1}
  auto tail = [&](int c) {
    Rat t(mu + c, M);
    t.canonicalize();
    if (sharpen_tails && t > 1) t = Rat(1);
    return t;
  };

  if (depth == 1) {
    Rat bound_plus = tail(3);
    Rat bound_sharp = rat(mu, mu + 1) * tail(4);
    bound_sharp.canonicalize();
    Rat elim = Rat(1) / bound_sharp;
    elim.canonicalize();
    s.constants.push_back({"bound-plus-1", bound_plus});
    s.constants.push_back({"bound-sharp", bound_sharp});
    s.constants.push_back({"elimination-factor", elim});
    Rat justifier = elim * bound_plus;
    justifier.canonicalize();
    s.justifiers.push_back(Comparison::make(
        "delta-sharp elimination: (mu+1)(mu+3)/(mu(mu+4)) >= 1", justifier, ">=", Rat(1)));

    // thresholds: T_sharp = tail(4) M / (mu+2), T_plus = tail(3) (mu+1) M / (mu (mu+2))
    Rat t_sharp = tail(4) * Rat(M) / Rat(mu + 2);
    t_sharp.canonicalize();
    Rat t_plus = tail(3) * Rat(mu + 1) * Rat(M) / (Rat(mu) * Rat(mu + 2));
    t_plus.canonicalize();
    s.branches.push_back({"sharp", t_sharp, "ratio-T"});
    s.branches.push_back({"plus-1", t_plus, w_claim});
    return s;
  }

  // depth 2: no elimination; the non-chain mass of the sharp cycles is routed
  // through the later stages, so every degree bucket closes on its own
  s.constants.push_back({"bound-plus-1", tail(3)});
  s.constants.push_back({"bound-plus-2", tail(4)});
  Rat bound_sharp = rat(mu, mu + 1) * tail(5);
  bound_sharp.canonicalize();
  s.constants.push_back({"bound-sharp-deep", bound_sharp});

  Rat t_sharp = tail(5) * Rat(M) / Rat(mu + 3);
  t_sharp.canonicalize();
  Rat t_plus2 = tail(4) * Rat(mu + 1) * Rat(M) / (Rat(mu) * Rat(mu + 3));
  t_plus2.canonicalize();
  Rat t_plus1 = tail(3) * Rat(mu + 1) * Rat(M) / (Rat(mu) * Rat(mu + 2));
  t_plus1.canonicalize();
  s.branches.push_back({"sharp-deep-T", t_sharp, "ratio-T"});
  s.branches.push_back({"sharp-deep-W", t_sharp, w_claim});
  s.branches.push_back({"plus-2", t_plus2, w_claim});
  s.branches.push_back({"plus-1", t_plus1, w_claim});
  return s;
}

bool systems_structurally_equal(const ChainSystem& a, const ChainSystem& b, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (a.mu != b.mu || a.M != b.M || a.depth != b.depth) return fail("parameters differ");
  if (a.lemma_coeff_T != b.lemma_coeff_T || a.lemma_coeff_W != b.lemma_coeff_W)
    return fail("lemma coefficients differ");
  if (a.constants.size() != b.constants.size()) return fail("constant lists differ in size");
  for (size_t i = 0; i < a.constants.size(); ++i)
    if (a.constants[i].name != b.constants[i].name ||
        a.constants[i].value != b.constants[i].value)
      return fail("constant " + a.constants[i].name + " differs");
  if (a.justifiers.size() != b.justifiers.size()) return fail("justifier lists differ");
  for (size_t i = 0; i < a.justifiers.size(); ++i)
    if (a.justifiers[i].lhs != b.justifiers[i].lhs || a.justifiers[i].rhs != b.justifiers[i].rhs)
      return fail("justifier values differ");
  if (a.branches.size() != b.branches.size()) return fail("branch lists differ in size");
  for (size_t i = 0; i < a.branches.size(); ++i) {
    if (a.branches[i].name != b.branches[i].name) return fail("branch names differ");
    if (a.branches[i].threshold != b.branches[i].threshold)
      return fail("branch " + a.branches[i].name + " thresholds differ");
    if (a.branches[i].claim_id != b.branches[i].claim_id)
      return fail("branch " + a.branches[i].name + " claims differ");
  }
  return true;
}

namespace {

QuadraticRatioClaim claim_by_id(const std::string& id) {
  if (id == "ratio-T") return ratio_claim_T(rat(4, 3));
  if (id == "ratio-W4") return ratio_claim_W_mu4(rat(3, 2));
  if (id == "ratio-W3") return ratio_claim_W_mu3(Rat(2));
  throw std::invalid_argument("unknown claim id " + id);
}

// run the branch closures of a chain system through the ratio engine
bool close_chain_system(const ChainSystem& sys, CaseResult& r) {
  bool all_closed = true;
  for (auto& j : sys.justifiers) {
    r.checks.push_back(j);
    if (!j.holds) all_closed = false;
  }
  std::map<std::string, Certificate> local;
  for (auto& br : sys.branches) {
    if (!local.count(br.claim_id)) local.emplace(br.claim_id, verify_cached(claim_by_id(br.claim_id)));
    const Certificate& cert = local.at(br.claim_id);
    if (!cert.ratio_min) {
      all_closed = false;
      r.checks.push_back(Comparison::make("branch " + br.name + ": ratio minimum not certified",
                                          Rat(0), "==", Rat(1)));
      continue;
    }
    auto cmp = Comparison::make(
        "branch " + br.name + " closes: threshold <= certified ratio minimum " +
            rat_str(*cert.ratio_min),
        br.threshold, "<=", *cert.ratio_min);
    r.checks.push_back(cmp);
    if (!cmp.holds) all_closed = false;
  }
  for (auto& kv : local) r.certificates.push_back(kv.second);
  return all_closed;
}

}  // namespace

CaseResult exclude_mu4(int M) {
  CaseResult r;
  r.case_id = "mu4";
  r.params = "M=" + std::to_string(M) + " mu=4";
  if (M < 7) return r;

  ChainSystem sys = mu4_system(4, M);
  bool closed = close_chain_system(sys, r);

  // the two dichotomy branches, as the paper states them
  r.checks.push_back(Comparison::make("branch 1 would need (mu+4)/(mu+2) > 4/3", rat(8, 6), ">",
                                      rat(4, 3), true));
  r.checks.push_back(Comparison::make("branch 2 would need (mu+3)(mu+1)/(mu(mu+2)) > 3/2",
                                      rat(35, 24), ">", rat(36, 24), true));
  r.checks.push_back(Comparison::make("branch 1 contradiction: mu < 4 at mu = 4", Rat(4), "<",
                                      Rat(4)));
  r.checks.push_back(Comparison::make("branch 2 contradiction: mu^2 < 2mu+6 at mu = 4", Rat(16),
                                      "<", Rat(14)));
  r.outcome = closed ? CaseOutcome::Excluded : CaseOutcome::NotExcluded;
  r.contradiction = "both branches of the dichotomy are impossible at mu = 4";
  r.strictness_source = "the dichotomy branches are strict; closure needs only non-strict minima";
  return r;
}

CaseResult exclude_mu3_extension(int M) {
  CaseResult r;
  r.case_id = "mu3-extension";
  r.params = "M=" + std::to_string(M) + " mu=3";
  r.experimental = true;
  if (M < 6) return r;

  ChainSystem sys =
      M == 6 ? chain_system(3, 6, 1, /*sharpen_tails=*/true) : chain_system(3, M, 2, false);
  bool closed = close_chain_system(sys, r);
  r.outcome = closed ? CaseOutcome::ExperimentalExcluded : CaseOutcome::ExperimentalOpen;
  r.contradiction = M == 6 ? "the depth-1 estimates close the sextic case"
                           : "every degree bucket of the depth-2 chain closes";
  r.strictness_source = "derived chain; the dichotomy branches are strict";
  return r;
}

// ---- ledger -------------------------------------------------------------------

LedgerResult run_claim_ledger(const LedgerConfig& config) {
  std::vector<std::function<CaseResult()>> jobs;
  auto corrupt_bound = [&](const std::string& id) -> std::optional<Rat> {
    auto it = config.corrupt.find(id);
    if (it == config.corrupt.end()) return std::nullopt;
    return it->second;
  };

  const int m_lo = std::max(config.M_min, 5);
  for (int M = m_lo; M <= config.M_max; ++M) {
    for (long n = 1; n <= 2; ++n)
      jobs.push_back([M, n] { return exclude_smooth_center(M, n); });
    for (int mu = 3; mu <= M - 3; ++mu) {
      jobs.push_back([M, mu] { return exclude_low_mult_point(M, mu); });
      jobs.push_back([M, mu, &corrupt_bound] { return exclude_L0(mu, M, corrupt_bound("prop7")); });
      jobs.push_back([M, mu] { return exclude_mu_ge_5(mu, M); });
    }
    for (int mu = 3; mu <= M - 2; ++mu)
      jobs.push_back(
          [M, mu, &corrupt_bound] { return lemma3_case(mu, M, corrupt_bound(mu >= 4 ? "lemma3-mu4" : "lemma3-mu3")); });
    if (M >= 7) jobs.push_back([M] { return exclude_mu4(M); });
    if (M >= 6) jobs.push_back([M] { return exclude_mu3_extension(M); });
  }
  for (int mu = 3; mu <= config.M_max - 2; ++mu)
    jobs.push_back([mu, &corrupt_bound] { return exclude_Y_equals_R(mu, corrupt_bound("prop8")); });

  LedgerResult out;
  out.cases = parallel_map<CaseResult>(jobs.size(), config.threads,
                                       [&](size_t i) { return jobs[i](); });

  out.paper_claims_certified = true;
  out.mu3_extension_certified = true;
  for (auto& c : out.cases) {
    bool is_mu4_negative_control = c.case_id == "mu-ge-5" && c.params.find("mu=4") != std::string::npos;
    if (c.experimental) {
      if (c.outcome != CaseOutcome::ExperimentalExcluded && c.outcome != CaseOutcome::NotApplicable)
        out.mu3_extension_certified = false;
      continue;
    }
    if (is_mu4_negative_control) {
      // expected to stay open; a certified contradiction here would be a bug
      if (c.outcome == CaseOutcome::Excluded) out.paper_claims_certified = false;
      continue;
    }
    if (c.outcome != CaseOutcome::Excluded && c.outcome != CaseOutcome::NotApplicable)
      out.paper_claims_certified = false;
  }
  return out;
}

}  // namespace fano
