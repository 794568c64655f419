#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/ratio_engine.hpp"

namespace fano {

// one exact scalar comparison link in an exclusion chain
struct Comparison {
  std::string label;
  Rat lhs;
  std::string rel;  // ">", ">=", "<", "<=", "=="
  Rat rhs;
  bool holds = false;
  bool strict = false;  // whether this link carries strict inequality

  static Comparison make(const std::string& label, const Rat& lhs, const std::string& rel,
                         const Rat& rhs, bool strict_link = false);
};

enum class CaseOutcome {
  Excluded,              // contradiction certified from paper-anchored bounds
  NotExcluded,           // pipeline ran, no contradiction (negative control)
  NotApplicable,         // parameters outside the regime
  ExperimentalExcluded,  // contradiction certified from derived constants
  ExperimentalOpen       // derived pipeline did not close
};

const char* outcome_name(CaseOutcome o);

struct CaseResult {
  std::string case_id;
  std::string params;
  CaseOutcome outcome = CaseOutcome::NotApplicable;
  std::string contradiction;
  std::string strictness_source;
  std::vector<Certificate> certificates;
  std::vector<Comparison> checks;
  bool experimental = false;

  bool certified() const {
    return outcome == CaseOutcome::Excluded || outcome == CaseOutcome::ExperimentalExcluded;
  }
};

// ---- the standard claims ---------------------------------------------------

// (2s+t)^2 >= 3 * 2s(s/2+t) on the nonnegative quadrant (equality on s = t)
QuadraticRatioClaim prop7_claim(const Rat& bound = Rat(3));

// the inequality of the Y = R case, which must FAIL:
// 2((mu+2)/mu) p0 + Sl >= (2p0+2Sl+Su)^2 / (p0/2+Sl+Su) on { p0 <= Sl }
QuadraticRatioClaim prop8_claim(int mu, std::optional<Rat> bound = std::nullopt);
// its reversal, certified to hold everywhere on the region
QuadraticRatioClaim prop8_reverse_claim(int mu);

// (2p0+2Sl+Su)^2 >= 4/3 (2p0+3Sl)(p0/2+Sl+Su) on { p0 <= Sl }
QuadraticRatioClaim ratio_claim_T(const Rat& bound);
// (2p0+2Sl+Su)^2 >= 3/2 (2p0+(8/3)Sl)(p0/2+Sl+Su) on { p0 <= Sl }
QuadraticRatioClaim ratio_claim_W_mu4(const Rat& bound);
// (2p0+2Sl+Su)^2 >= 2 (2p0+2Sl)(p0/2+Sl+Su) on { p0 <= Sl }
QuadraticRatioClaim ratio_claim_W_mu3(const Rat& bound);

// ---- case operations -------------------------------------------------------

// smooth center: mult_B Z > 4n^2 against (4/M) deg Z = 4n^2 with deg Z = M n^2
CaseResult exclude_smooth_center(int M, long n);

// singular point of low multiplicity: (M - mu - 1)^2 mu > M
CaseResult exclude_low_mult_point(int M, int mu);

// L = 0 resolutions: ratio bound 3, telescoping to 3mu/(mu+2) > 1
CaseResult exclude_L0(int mu, int M, std::optional<Rat> bound_override = std::nullopt);

// Y = R is impossible: the Prop-8 inequality is false everywhere on the cone
CaseResult exclude_Y_equals_R(int mu, std::optional<Rat> bound_override = std::nullopt);

// the a = 0 case of the tangent-cone decomposition is impossible
CaseResult lemma3_case(int mu, int M, std::optional<Rat> bound_override = std::nullopt);

// mu >= 5 exclusion; runs for mu = 4 as well, where it must NOT certify
CaseResult exclude_mu_ge_5(int mu, int M);

// ---- the mu = 4 system and its generalization ------------------------------

struct NamedValue {
  std::string name;
  Rat value;
};

struct ChainBranch {
  std::string name;
  Rat threshold;         // branch coefficient to compare against the ratio minimum
  std::string claim_id;  // which ratio claim closes it ("ratio-T" or "ratio-W")
};

struct ChainSystem {
  int mu = 0;
  int M = 0;
  int depth = 1;
  bool sharpened_tails = false;         // cap mult/deg tail bounds at 1
  Rat lemma_coeff_T;                    // 3/mu
  Rat lemma_coeff_W;                    // 8/(3 mu) for mu >= 4, 2/mu for mu = 3
  std::vector<NamedValue> constants;    // the per-branch mult/deg bounds etc.
  std::vector<Comparison> justifiers;   // delta-sharp elimination inequalities
  std::vector<ChainBranch> branches;
};

// depth-1 system transcribed from the displayed mu = 4 computation
ChainSystem mu4_system(int mu, int M);

// the generalized chain template; depth 1 reproduces mu4_system exactly
ChainSystem chain_system(int mu, int M, int depth, bool sharpen_tails);

bool systems_structurally_equal(const ChainSystem& a, const ChainSystem& b,
                                std::string* why = nullptr);

CaseResult exclude_mu4(int M);

// mu = 3: M = 6 routes to the depth-1 estimates, M >= 7 runs the chain one
// step deeper; every constant is derived by the template, none quoted
CaseResult exclude_mu3_extension(int M);

// ---- the ledger -------------------------------------------------------------

struct LedgerConfig {
  int M_min = 5;
  int M_max = 30;
  std::map<std::string, Rat> corrupt;  // claim id -> bound override (test hook)
  bool strict_mu3 = false;
  int threads = 1;
};

struct LedgerResult {
  std::vector<CaseResult> cases;
  bool paper_claims_certified = false;
  bool mu3_extension_certified = false;

  bool success(bool strict_mu3) const {
    return paper_claims_certified && (!strict_mu3 || mu3_extension_certified);
  }
};

LedgerResult run_claim_ledger(const LedgerConfig& config);

}  // namespace fano
