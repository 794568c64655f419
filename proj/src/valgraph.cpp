#include "fano/valgraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fano {

bool ResolutionGraph::has_arrow(int from, int to) const {
  for (auto& a : arrows)
    if (a.from == from && a.to == to) return true;
  return false;
}

std::vector<int> ResolutionGraph::arrows_into(int node) const {
  std::vector<int> src;
  for (auto& a : arrows)
    if (a.to == node) src.push_back(a.from);
  std::sort(src.begin(), src.end());
  return src;
}

void ResolutionGraph::validate() const {
  if (K < 0) throw std::invalid_argument("negative node count");
  if (L < 0 || L > K) throw std::invalid_argument("L out of range");
  if (delta.size() != static_cast<size_t>(K + 1)) throw std::invalid_argument("delta row has wrong length");
  if (mult.size() != static_cast<size_t>(K + 1)) throw std::invalid_argument("mult row has wrong length");
  for (int i = 1; i <= L; ++i)
    if (delta[i] < 2) throw std::invalid_argument("lower-part node " + std::to_string(i) + " needs delta >= 2");
  for (int i = L + 1; i <= K; ++i)
    if (delta[i] != 1) throw std::invalid_argument("upper-part node " + std::to_string(i) + " needs delta = 1");
  for (int i = 1; i <= K; ++i)
    if (mult[i] < 1) throw std::invalid_argument("center multiplicity below 1");
  std::set<std::pair<int, int>> seen;
  for (auto& a : arrows) {
    if (a.from <= a.to || a.from > K || a.to < 0)
      throw std::invalid_argument("not a DAG: arrow " + std::to_string(a.from) + " -> " +
                                  std::to_string(a.to));
    if (!seen.insert({a.from, a.to}).second)
      throw std::invalid_argument("parallel arrows between " + std::to_string(a.from) + " and " +
                                  std::to_string(a.to));
  }
  // node K must reach node 0
  if (K > 0) {
    std::vector<char> reach(K + 1, 0);
    reach[K] = 1;
    for (int i = K; i >= 1; --i) {
      if (!reach[i]) continue;
      for (auto& a : arrows)
        if (a.from == i) reach[a.to] = 1;
    }
    if (!reach[0]) throw std::invalid_argument("node K does not reach node 0");
  }
}

WeightAssignment WeightAssignment::defaults(int mu) {
  if (mu <= 0) throw std::invalid_argument("mu must be positive");
  WeightAssignment w;
  w.into_zero_default = rat(2, mu);
  w.into_zero_default.canonicalize();
  return w;
}

Rat WeightAssignment::get(int from, int to) const {
  auto it = beta.find({from, to});
  if (it != beta.end()) return it->second;
  return to == 0 ? into_zero_default : other_default;
}

void WeightAssignment::set(int from, int to, const Rat& b) {
  if (sgn(b) <= 0) throw std::invalid_argument("beta weights must be positive");
  beta[{from, to}] = b;
}

std::vector<long long> path_counts(const ResolutionGraph& g) { return path_counts_from(g, g.K); }

std::vector<long long> path_counts_from(const ResolutionGraph& g, int base) {
  g.validate();
  if (base < 0 || base > g.K) throw std::invalid_argument("base node out of range");
  std::vector<long long> p(base + 1, 0);
  p[base] = 1;
  for (int i = base - 1; i >= 0; --i) {
    long long acc = 0;
    for (auto& a : g.arrows)
      if (a.to == i && a.from <= base) acc += p[a.from];
    p[i] = acc;
  }
  return p;
}

std::vector<Rat> weights(const ResolutionGraph& g, const WeightAssignment& beta, int base) {
  g.validate();
  if (base < 0 || base > g.K) throw std::invalid_argument("base node out of range");
  std::vector<Rat> w(base + 1, Rat(0));
  w[base] = 1;
  for (int j = base - 1; j >= 0; --j) {
    Rat acc(0);
    for (auto& a : g.arrows)
      if (a.to == j && a.from <= base) acc += w[a.from] * beta.get(a.from, a.to);
    acc.canonicalize();
    w[j] = acc;
  }
  return w;
}

ResolutionGraph prune_to_estimate2(const ResolutionGraph& g) {
  g.validate();
  if (g.L < 1) throw std::invalid_argument("upper-only graph; estimate (2) unavailable");
  ResolutionGraph out = g;
  out.arrows.clear();
  for (auto& a : g.arrows)
    if (!(a.to == 0 && a.from >= g.L + 1)) out.arrows.push_back(a);
  return out;
}

bool noether_fano(const std::vector<Rat>& p, const std::vector<int>& delta,
                  const std::vector<Rat>& nu, const Rat& n) {
  if (p.size() != delta.size() || p.size() != nu.size())
    throw std::invalid_argument("vector sizes differ");
  Rat lhs(0), rhs(0);
  for (size_t i = 0; i < p.size(); ++i) {
    lhs += p[i] * nu[i];
    rhs += p[i] * Rat(delta[i]);
  }
  rhs *= n;
  return lhs > rhs;
}

QuadMinResult quad_min(const Rat& p0, const std::vector<Rat>& p_rest, const Rat& C) {
  if (sgn(p0) <= 0) throw std::invalid_argument("nonpositive weight");
  for (auto& p : p_rest)
    if (sgn(p) <= 0) throw std::invalid_argument("nonpositive weight");
  if (sgn(C) <= 0) throw std::invalid_argument("nonpositive budget");
  Rat sum_rest(0);
  for (auto& p : p_rest) sum_rest += p;
  QuadMinResult r;
  Rat denom = p0 / 2 + sum_rest;
  r.value = C * C / denom;
  r.value.canonicalize();
  // stationarity: nu0 = lambda/4, nu_i = lambda/2 for one multiplier
  r.lambda = C / (p0 / 4 + sum_rest / 2);
  r.lambda.canonicalize();
  r.nu0 = r.lambda / 4;
  r.nu_rest.assign(p_rest.size(), r.lambda / 2);
  return r;
}

Rat Prop6Data::lhs(const MultiplicityData& m) const {
  if (m.mi.size() + 1 > p.size()) throw std::invalid_argument("m vector longer than the graph");
  Rat acc = rat(2, mu) * Rat(static_cast<long>(p[0])) * m.m0;
  for (size_t i = 0; i < m.mi.size(); ++i) acc += Rat(static_cast<long>(p[i + 1])) * m.mi[i];
  acc.canonicalize();
  return acc;
}

Rat Prop6Data::rhs(const Rat& deg_y) const {
  Rat r = rhs_per_unit_degree * deg_y;
  r.canonicalize();
  return r;
}

Prop6Data prop6_threshold(const ResolutionGraph& g, const WeightAssignment& beta, int mu, int M) {
  g.validate();
  if (mu < 2 || M < mu + 2) throw std::invalid_argument("bad mu, M");
  if (g.delta[0] != M - mu - 1)
    throw std::invalid_argument("graph delta_0 inconsistent with M - mu - 1");
  Prop6Data out;
  out.mu = mu;
  out.M = M;
  out.p = path_counts(g);
  out.w_lower = weights(g, beta, g.L);
  Rat num(0), den(0);
  for (int i = 0; i <= g.K; ++i) num += Rat(static_cast<long>(out.p[i])) * Rat(g.delta[i]);
  den = Rat(static_cast<long>(out.p[0]), 2);
  for (int i = 1; i <= g.K; ++i) den += Rat(static_cast<long>(out.p[i]));
  out.rhs_per_unit_degree = num * num / (den * Rat(M));
  out.rhs_per_unit_degree.canonicalize();
  return out;
}

SelfIntersectionData random_self_intersection(const ResolutionGraph& g,
                                              const WeightAssignment& beta, Rng& rng) {
  g.validate();
  auto rnd_small = [&](long lo, long hi) { return rat(rng.int_in(lo, hi), rng.int_in(1, 4)); };
  SelfIntersectionData out;
  out.nu.assign(g.K + 1, Rat(0));
  for (int i = 1; i <= g.K; ++i) {
    out.nu[i] = rnd_small(0, 12);
    out.nu[i].canonicalize();
  }
  out.d.assign(g.L + 1, Rat(0));
  // d_L must cover the upper-part multiplicities
  Rat upper(0);
  for (int i = g.L + 1; i <= g.K; ++i) upper += Rat(g.mult[i]) * out.nu[i] * out.nu[i];
  for (int i = 1; i < g.L; ++i) out.d[i] = rnd_small(0, 20);
  if (g.L >= 1) out.d[g.L] = upper + rnd_small(0, 20);
  out.m.assign(g.L + 1, std::vector<Rat>(g.L + 1, Rat(0)));
  for (int j = 1; j <= g.L; ++j) {
    Rat budget = Rat(g.mult[j]) * out.nu[j] * out.nu[j] + out.d[j];
    // draw m_{i,j} within beta_{j,i} d_i, then scale down so m_{0,j} >= 0
    Rat lower_sum(0);
    for (int i = 1; i < j; ++i) {
      if (!g.has_arrow(j, i)) continue;  // beta_{j,i} = 0 when no arrow
      Rat cap = beta.get(j, i) * out.d[i];
      Rat u = rat(rng.int_in(0, 8), 8);
      out.m[i][j] = u * cap;
      out.m[i][j].canonicalize();
      lower_sum += out.m[i][j];
    }
    if (lower_sum > budget && sgn(lower_sum) > 0) {
      Rat scale = budget / lower_sum;
      for (int i = 1; i < j; ++i) out.m[i][j] *= scale;
      lower_sum = budget;
    }
    out.m[0][j] = budget - lower_sum;
    out.m[0][j].canonicalize();
  }
  return out;
}

Eq32Check eq32_check(const ResolutionGraph& g, const WeightAssignment& beta,
                     const SelfIntersectionData& data) {
  auto w = weights(g, beta, g.L);
  Eq32Check out;
  out.lhs = Rat(0);
  out.rhs = Rat(0);
  for (int j = 1; j <= g.L; ++j) {
    out.lhs += w[j] * data.m[0][j];
    out.rhs += w[j] * Rat(g.mult[j]) * data.nu[j] * data.nu[j];
  }
  for (int i = g.L + 1; i <= g.K; ++i) out.rhs += Rat(g.mult[i]) * data.nu[i] * data.nu[i];
  out.lhs.canonicalize();
  out.rhs.canonicalize();
  out.holds = out.lhs >= out.rhs;
  return out;
}

bool path_monotonicity_check(const ResolutionGraph& g) {
  auto pK = path_counts(g);
  auto pL = path_counts_from(g, g.L);
  for (int i = 0; i <= g.L; ++i)
    if (pK[i] < pK[g.L] * pL[i]) return false;
  return true;
}

EDivisorBound e_divisor_bound(int mu) {
  if (mu < 3) throw std::invalid_argument("needs mu >= 3");
  EDivisorBound b;
  b.bound = rat(2, mu);
  b.generic_bound = rat(3, 2 * mu);
  b.bound.canonicalize();
  b.generic_bound.canonicalize();
  return b;
}

GraphFile graph_read(std::istream& in, int mu) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string body = raw.substr(0, raw.find('#'));
    bool blank = true;
    for (char c : body)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) lines.push_back(body);
  }
  if (lines.size() < 2) throw std::runtime_error("graph file needs K L and a delta row");
  GraphFile gf;
  gf.beta = WeightAssignment::defaults(mu);
  {
    std::istringstream ls(lines[0]);
    if (!(ls >> gf.graph.K >> gf.graph.L)) throw std::runtime_error("bad 'K L' line");
  }
  {
    std::istringstream ls(lines[1]);
    int v;
    while (ls >> v) gf.graph.delta.push_back(v);
  }
  size_t arrows_start = 2;
  gf.graph.mult.push_back(0);  // slot for node 0
  if (gf.graph.K >= 1) {
    if (lines.size() < 3) throw std::runtime_error("graph file needs a mult row");
    std::istringstream ls(lines[2]);
    int v;
    while (ls >> v) gf.graph.mult.push_back(v);
    arrows_start = 3;
  }
  for (size_t k = arrows_start; k < lines.size(); ++k) {
    std::istringstream ls(lines[k]);
    int j, i;
    if (!(ls >> j >> i)) throw std::runtime_error("bad arrow line: " + lines[k]);
    gf.graph.arrows.push_back({j, i});
    std::string b;
    if (ls >> b) {
      gf.beta.set(j, i, rat_parse(b));
      gf.has_custom_beta = true;
    }
  }
  gf.graph.validate();
  return gf;
}

void graph_write(std::ostream& out, const ResolutionGraph& g) {
  out << g.K << ' ' << g.L << "\n";
  for (int i = 0; i <= g.K; ++i) out << (i ? " " : "") << g.delta[i];
  out << "\n";
  for (int i = 1; i <= g.K; ++i) out << (i > 1 ? " " : "") << g.mult[i];
  out << "\n";
  for (auto& a : g.arrows) out << a.from << ' ' << a.to << "\n";
}

ResolutionGraph random_resolution_graph(int max_nodes, int delta0, Rng& rng) {
  if (max_nodes < 1) throw std::invalid_argument("need at least one blow-up");
  ResolutionGraph g;
  g.K = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_nodes)));
  g.L = static_cast<int>(rng.below(static_cast<uint64_t>(g.K + 1)));
  g.delta.assign(g.K + 1, 1);
  g.delta[0] = delta0;
  for (int i = 1; i <= g.L; ++i) g.delta[i] = 2 + static_cast<int>(rng.below(3));
  g.mult.assign(g.K + 1, 1);
  for (int i = 1; i <= g.K; ++i) g.mult[i] = 1 + static_cast<int>(rng.below(3));
  for (int i = 1; i <= g.K; ++i) {
    g.arrows.push_back({i, i - 1});
    for (int j = 0; j < i - 1; ++j)
      if (rng.below(3) == 0) g.arrows.push_back({i, j});
  }
  return g;
}

}  // namespace fano
