#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fano/groebner.hpp"
#include "fano/random_poly.hpp"
#include "fano/rational.hpp"
#include "fano/recenter.hpp"

namespace fano {

// Hypersurface germ at a point: the local equation of a degree-M hypersurface
// in P^M recentered at the point, carried by its graded parts
// q_mu + ... + q_M in M affine variables. mu is the multiplicity of the point.
template <class K>
struct HypersurfaceGerm {
  int M = 0;
  int mu = 0;
  Poly<K> f;  // q_mu + ... + q_M, vanishes at the origin

  Poly<K> part(int d) const { return f.graded_part(static_cast<uint32_t>(d)); }
};

template <class K>
HypersurfaceGerm<K> germ_from_parts(int M, int mu, const std::vector<Poly<K>>& parts) {
  if (M < 2 || mu < 1 || mu > M) throw std::invalid_argument("bad germ parameters");
  if (parts.size() != static_cast<size_t>(M - mu + 1))
    throw std::invalid_argument("expected graded parts q_mu ... q_M");
  Poly<K> f(static_cast<size_t>(M));
  for (size_t k = 0; k < parts.size(); ++k) {
    const auto& q = parts[k];
    if (q.nvars() != static_cast<size_t>(M)) throw std::invalid_argument("part in wrong ring");
    if (!q.zero_poly() && (!q.homogeneous() || q.degree() != mu + k))
      throw std::invalid_argument("part " + std::to_string(mu + k) + " not homogeneous of its degree");
    f = f + q;
  }
  if (f.zero_poly()) throw std::invalid_argument("zero germ");
  HypersurfaceGerm<K> g;
  g.M = M;
  g.mu = mu;
  g.f = f;
  if (multiplicity(g) != mu) throw std::invalid_argument("q_mu vanishes; multiplicity is higher");
  return g;
}

template <class K>
HypersurfaceGerm<K> germ_from_equation(int M, const Poly<K>& f) {
  if (f.zero_poly()) throw std::invalid_argument("zero germ");
  HypersurfaceGerm<K> g;
  g.M = M;
  g.f = f;
  g.mu = 0;
  g.mu = multiplicity(g);
  return g;
}

// mu = min { k : q_k != 0 }
template <class K>
int multiplicity(const HypersurfaceGerm<K>& g) {
  if (g.f.zero_poly()) throw std::invalid_argument("zero germ");
  uint32_t best = UINT32_MAX;
  for (auto& t : g.f.terms()) best = std::min(best, t.m.deg);
  return static_cast<int>(best);
}

// the projectivized tangent cone {q_mu = 0} in P^{M-1}
template <class K>
Poly<K> tangent_cone(const HypersurfaceGerm<K>& g) {
  return g.part(g.mu);
}

// ---- regularity ---------------------------------------------------------

enum class Verdict { Pass, Fail, NotApplicable, Skipped };

struct ConditionResult {
  Verdict verdict = Verdict::NotApplicable;
  std::string witness;
};

struct RegularityReport {
  ConditionResult def1;     // Definition 1, filled for smooth germs only
  ConditionResult cond_i;   // regular sequence q_mu,...,q_M
  ConditionResult cond_ii;  // tangent cone smooth and regular at sampled points
  ConditionResult cond_iii; // the codimension-(9-mu) condition at sampled points
  std::string note;

  bool failed() const {
    return def1.verdict == Verdict::Fail || cond_i.verdict == Verdict::Fail ||
           cond_ii.verdict == Verdict::Fail || cond_iii.verdict == Verdict::Fail;
  }
  bool passed() const { return !failed(); }
};

const char* verdict_name(Verdict v);

struct RegularityOptions {
  int sample_count = 8;
  uint64_t seed = 7;
  int threads = 1;
  bool run_i = true;
  bool run_ii = true;
  bool run_iii = true;  // skipped conditions come back as Verdict::Skipped
};

// Definition 2 for a singular germ with 2 <= mu <= M-2. sample_count controls
// the random-point checks in (ii) and (iii); zero marks those parts Skipped.
RegularityReport check_regularity(const HypersurfaceGerm<Fp>& g, const RegularityOptions& opt);
RegularityReport check_regularity(const HypersurfaceGerm<Fp>& g, int sample_count, uint64_t seed,
                                  int threads = 1);
RegularityReport check_regularity(const HypersurfaceGerm<Rat>& g, int sample_count, uint64_t seed,
                                  int threads = 1);

// Definition 1 at a smooth point (mu = 1).
template <class K>
RegularityReport check_smooth_regularity(const HypersurfaceGerm<K>& g);

// ---- hypertangent systems -----------------------------------------------

template <class K>
struct HypertangentSystem {
  int i = 0;
  std::vector<Poly<K>> s;  // s_0 ... s_{i-mu}
  Poly<K> member;          // sum f_j s_{i-j}
};

// left segments f_i = q_mu + ... + q_i
template <class K>
Poly<K> left_segment(const HypersurfaceGerm<K>& g, int i) {
  Poly<K> f(static_cast<size_t>(g.M));
  for (int d = g.mu; d <= i; ++d) f = f + g.part(d);
  return f;
}

template <class K, class Ctx>
HypertangentSystem<K> hypertangent_system(const HypersurfaceGerm<K>& g, int i, const Ctx& ctx,
                                          uint64_t seed) {
  if (i < g.mu || i > g.M - 1) throw std::invalid_argument("hypertangent index out of range");
  Rng rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    HypertangentSystem<K> sys;
    sys.i = i;
    sys.member = Poly<K>(static_cast<size_t>(g.M));
    for (int k = 0; k <= i - g.mu; ++k) {
      Poly<K> sk = k == 0 ? Poly<K>::constant(g.M, random_nonzero(ctx, rng))
                          : random_form(g.M, static_cast<uint32_t>(k), ctx, rng);
      sys.s.push_back(sk);
      sys.member = sys.member + left_segment(g, i - k) * sk;
    }
    if (!sys.member.zero_poly()) return sys;
  }
  throw std::runtime_error("degenerate hypertangent draw");
}

// codim_V of the base locus of Lambda_i, i.e. of {q_mu = ... = q_i = 0} on V
template <class K>
int base_locus_codim(const HypersurfaceGerm<K>& g, int i) {
  if (i < g.mu || i > g.M - 1) throw std::invalid_argument("hypertangent index out of range");
  std::vector<Poly<K>> gens;
  for (int d = g.mu; d <= i; ++d) gens.push_back(g.part(d));
  gens.push_back(g.f);
  int dim = ideal_dimension(groebner_basis<K>(static_cast<size_t>(g.M), gens));
  return (g.M - 1) - dim;
}

// ---- exact bookkeeping ratios -------------------------------------------

// (i+1) mu / (i M), the multiplicity-to-degree bound of the i-th hypertangent
// divisor
Rat hypertangent_ratio(int i, int mu, int M);

// product of (i+1)/i over the listed indices, times (mu/M)^power
Rat chain_factor(const std::vector<int>& indices, int mu, int M, int mu_over_M_power = 0);

struct CycleRStats {
  Rat mult_over_deg;       // (mu+2)/M
  long strict_mult_bound;  // 1
};
CycleRStats special_cycle_R_stats(int mu, int M);

struct CycleTStats {
  long deg;   // 2 mu
  long mult;  // 6
};
CycleTStats cycle_T_stats(int mu);

// Symbolic verification of deg T and mult_y T on an explicit cone equation:
// T is cut in E = {cone = 0} by the tangent hyperplane at y and the quadric
// polar there. Degree comes from a generic 0-dimensional slice, multiplicity
// from the local ring at y.
struct CycleTVerification {
  long deg = 0;
  long mult = 0;
  std::vector<Fp> point;
};
CycleTVerification cycle_T_verify(const Poly<Fp>& cone, uint64_t seed);

// ---- sampling ------------------------------------------------------------

// random point of {form = 0} in P^{nvars-1}(F_p); throws after too many tries
std::vector<Fp> sample_hypersurface_point(const Poly<Fp>& form, Rng& rng);

// degree-d polar form of q at y: the weight-d part of q(y + z) in z
template <class K>
Poly<K> polar_form(const Poly<K>& q, const std::vector<K>& y, int d);

HypersurfaceGerm<Fp> random_germ(int M, int mu, uint64_t seed, const FpCtx& ctx);
HypersurfaceGerm<Rat> random_germ(int M, int mu, uint64_t seed, const RatCtx& ctx);

// ---- germ files -----------------------------------------------------------

// header line "M mu", then one polynomial block per graded part q_mu..q_M in
// the shared polynomial text format, blocks separated by a line "--"
struct GermData {
  int M = 0;
  int mu = 0;
  std::vector<PolyQ> parts;
};

GermData germ_read(std::istream& in);
void germ_write(std::ostream& out, const GermData& g);
HypersurfaceGerm<Fp> germ_to_fp(const GermData& g, int64_t prime);
HypersurfaceGerm<Rat> germ_to_rat(const GermData& g);
GermData germ_data_from_fp(const HypersurfaceGerm<Fp>& g);

}  // namespace fano
