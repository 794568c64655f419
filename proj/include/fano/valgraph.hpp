#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano/rational.hpp"
#include "fano/rng.hpp"

namespace fano {

// Oriented graph of a resolved valuation: nodes 0..K are the blow-ups, node 0
// the blow-up of the point x itself. Arrows run from higher to lower index
// (j -> i means the later center sits on the strict transform of E_i). The
// first L nodes after 0 have centers of codimension >= 3, the rest
// codimension 2.
struct ResolutionGraph {
  int K = 0;
  int L = 0;
  std::vector<int> delta;  // delta[0..K]; delta[0] = M - mu - 1
  std::vector<int> mult;   // mult[1..K] = mu_i >= 1; mult[0] unused
  struct Arrow {
    int from = 0;  // j
    int to = 0;    // i < j
  };
  std::vector<Arrow> arrows;

  bool has_arrow(int from, int to) const;
  std::vector<int> arrows_into(int node) const;  // sources j of arrows j -> node
  void validate() const;                         // throws on malformed data
};

// beta weights per arrow; absent entries fall back to the defaults of the
// paper's worst case: 2/mu on arrows into node 0, 1 elsewhere
struct WeightAssignment {
  std::map<std::pair<int, int>, Rat> beta;  // key (from, to)
  Rat into_zero_default;                    // 2/mu
  Rat other_default = Rat(1);

  static WeightAssignment defaults(int mu);
  Rat get(int from, int to) const;
  void set(int from, int to, const Rat& b);
};

struct MultiplicityData {
  std::vector<Rat> nu;  // nu_0..nu_K
  Rat m0;               // mult_x Y
  std::vector<Rat> mi;  // m_1(Y)..m_L(Y)
  Rat n;                // degree of the moving system
  Rat deg_y;            // deg Y
};

// p_i = number of paths from node K to node i; p_K = 1
std::vector<long long> path_counts(const ResolutionGraph& g);

// paths from `base` to each node i <= base, counted with multiplicity
std::vector<long long> path_counts_from(const ResolutionGraph& g, int base);

// Lemma-4 weights: w[base][j] as a vector over j = 0..base, computed by the
// recursion w_{i,j} = sum over arrows k -> j of w_{i,k} beta_{k,j}
std::vector<Rat> weights(const ResolutionGraph& g, const WeightAssignment& beta, int base);

// erase arrows from the upper part (index > L) into node 0; after this
// p_0 <= sum of the lower p_i (estimate (2))
ResolutionGraph prune_to_estimate2(const ResolutionGraph& g);

// the Noether-Fano inequality sum p_i nu_i > n sum p_i delta_i, decided exactly
bool noether_fano(const std::vector<Rat>& p, const std::vector<int>& delta,
                  const std::vector<Rat>& nu, const Rat& n);

struct QuadMinResult {
  Rat value;                 // C^2 / (p0/2 + sum p_i)
  Rat nu0;                   // minimizer: lambda/4
  std::vector<Rat> nu_rest;  // minimizer: lambda/2 per entry
  Rat lambda;
};

// exact infimum of 2 p0 nu0^2 + sum p_i nu_i^2 over p0 nu0 + sum p_i nu_i = C
QuadMinResult quad_min(const Rat& p0, const std::vector<Rat>& p_rest, const Rat& C);

struct Prop6Data {
  std::vector<long long> p;       // path counts from K
  std::vector<Rat> w_lower;       // w_{L,j}, j = 0..L
  Rat rhs_per_unit_degree;        // (sum p_i delta_i)^2 / ((p0/2 + sum p_i) M)
  int mu = 0;
  int M = 0;

  // left side of estimate (1): (2/mu) p0 m(Y) + sum p_i m_i(Y)
  Rat lhs(const MultiplicityData& m) const;
  // right side of (1) for a given deg Y
  Rat rhs(const Rat& deg_y) const;
};

Prop6Data prop6_threshold(const ResolutionGraph& g, const WeightAssignment& beta, int mu, int M);

// The self-intersection bookkeeping of the multiplicity-counting argument:
// d[i] and m[i][j] with mu_i nu_i^2 + d_i = m_{0,i} + ... + m_{i-1,i} and
// m_{i,j} <= beta_{j,i} d_i feeding the weighted aggregation.
struct SelfIntersectionData {
  std::vector<Rat> nu;              // nu_1..nu_K (index 0 unused)
  std::vector<Rat> d;               // d_1..d_L (index 0 unused)
  std::vector<std::vector<Rat>> m;  // m[i][j] for 0 <= i < j <= L
};

// draw a consistent random instance of the equality system
SelfIntersectionData random_self_intersection(const ResolutionGraph& g,
                                              const WeightAssignment& beta, Rng& rng);

struct Eq32Check {
  Rat lhs;  // sum w_{L,j} m_{0,j}
  Rat rhs;  // sum w_{L,j} mu_j nu_j^2 + sum_{i>L} mu_i nu_i^2
  bool holds = false;
};

Eq32Check eq32_check(const ResolutionGraph& g, const WeightAssignment& beta,
                     const SelfIntersectionData& data);

// the step from the w_{L,*} aggregation to path counts from K: requires
// p_{K,i} >= p_{K,L} p_{L,i} for i <= L, checked exactly on the given graph
bool path_monotonicity_check(const ResolutionGraph& g);

struct EDivisorBound {
  Rat bound;          // 2/mu, attained by T_y E cap E only
  Rat generic_bound;  // 3/(2 mu) for every other divisor
};
EDivisorBound e_divisor_bound(int mu);

// graph text format: "K L" / delta row / mult row / one "j i [beta]" per line
struct GraphFile {
  ResolutionGraph graph;
  WeightAssignment beta;  // defaults filled against mu at load time
  bool has_custom_beta = false;
};

GraphFile graph_read(std::istream& in, int mu);
void graph_write(std::ostream& out, const ResolutionGraph& g);

// random valid resolution graph for property tests: consecutive arrows are
// always present, extra back arrows are sampled
ResolutionGraph random_resolution_graph(int max_nodes, int delta0, Rng& rng);

}  // namespace fano
