#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano/poly.hpp"

namespace fano {

// Ideal given by generators in a common polynomial ring.
template <class K>
struct Ideal {
  size_t nvars = 0;
  std::vector<Poly<K>> gens;

  Ideal() = default;
  Ideal(size_t n, std::vector<Poly<K>> g) : nvars(n), gens(std::move(g)) {
    for (auto& p : gens)
      if (p.nvars() != nvars) throw std::invalid_argument("generator in wrong ring");
  }
};

// Reduced Groebner basis w.r.t. grevlex: monic, auto-reduced, sorted by
// ascending leading term. The reduced basis of an ideal is unique, which the
// idempotence tests rely on.
template <class K>
struct Groebner {
  size_t nvars = 0;
  std::vector<Poly<K>> g;

  bool trivial() const { return g.size() == 1 && g[0].lead().m.is_one(); }
};

// Full normal form: every term of the remainder is irreducible by the basis.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis) {
  Poly<K> rem(f.nvars());
  Poly<K> work = f;
  std::vector<typename Poly<K>::Term> rem_terms;
  while (!work.zero_poly()) {
    const auto& lt = work.lead();
    const Poly<K>* reducer = nullptr;
    for (auto& b : basis) {
      if (!b.zero_poly() && divides(b.lead().m, lt.m)) {
        reducer = &b;
        break;
      }
    }
    if (reducer) {
      K c = lt.c / reducer->lead().c;
      work = work.reduce_step(c, quotient(lt.m, reducer->lead().m), *reducer);
    } else {
      rem_terms.push_back(lt);
      work = work - Poly<K>::term(lt.m, lt.c);
    }
  }
  for (auto& t : rem_terms) rem.push_sorted(t.m, t.c);
  return rem;
}

template <class K>
Poly<K> s_poly(const Poly<K>& f, const Poly<K>& g) {
  Monomial l = lcm(f.lead().m, g.lead().m);
  Poly<K> a = f.scaled(inv(f.lead().c)).mul_monomial(quotient(l, f.lead().m));
  Poly<K> b = g.scaled(inv(g.lead().c)).mul_monomial(quotient(l, g.lead().m));
  return a - b;
}

namespace detail {

template <class K>
std::vector<Poly<K>> interreduce(std::vector<Poly<K>> polys) {
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < polys.size(); ++i) {
      Poly<K> p = polys[i];
      std::vector<Poly<K>> others;
      for (size_t j = 0; j < polys.size(); ++j)
        if (j != i) others.push_back(polys[j]);
      Poly<K> r = normal_form(p, others);
      if (r != p) {
        changed = true;
        polys[i] = r;
      }
    }
    polys.erase(std::remove_if(polys.begin(), polys.end(),
                               [](const Poly<K>& p) { return p.zero_poly(); }),
                polys.end());
  }
  for (auto& p : polys) p = p.monic();
  std::sort(polys.begin(), polys.end(), [](const Poly<K>& a, const Poly<K>& b) {
    return grevlex_cmp(a.lead().m, b.lead().m) < 0;
  });
  return polys;
}

}  // namespace detail

// Buchberger with normal pair selection (smallest lcm degree first) and the
// coprime-leading-term criterion.
template <class K>
Groebner<K> groebner_basis(const Ideal<K>& ideal) {
  if (ideal.gens.empty()) throw std::invalid_argument("empty generator list");
  std::vector<Poly<K>> basis;
  for (auto& p : ideal.gens)
    if (!p.zero_poly()) basis.push_back(p.monic());
  Groebner<K> out;
  out.nvars = ideal.nvars;
  if (basis.empty()) return out;
  basis = detail::interreduce(std::move(basis));

  struct Pair {
    size_t i, j;
    Monomial l;
  };
  auto pair_less = [](const Pair& a, const Pair& b) { return grevlex_cmp(a.l, b.l) < 0; };

  std::vector<Pair> pairs;
  std::set<std::pair<size_t, size_t>> pending;
  auto add_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      if (coprime(basis[i].lead().m, basis[j].lead().m)) continue;
      pairs.push_back({i, j, lcm(basis[i].lead().m, basis[j].lead().m)});
      pending.insert({i, j});
    }
  };
  auto is_pending = [&](size_t a, size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };
  for (size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair pr = *it;
    pairs.erase(it);
    pending.erase({pr.i, pr.j});
    // chain criterion: if some other leading term divides the lcm and both
    // side pairs are already settled, this S-polynomial reduces to zero
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(basis[k].lead().m, pr.l)) continue;
      if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) skip = true;
    }
    if (skip) continue;
    Poly<K> r = normal_form(s_poly(basis[pr.i], basis[pr.j]), basis);
    if (!r.zero_poly()) {
      basis.push_back(r.monic());
      add_pairs_for(basis.size() - 1);
    }
  }
  out.g = detail::interreduce(std::move(basis));
  return out;
}

template <class K>
Groebner<K> groebner_basis(size_t nvars, const std::vector<Poly<K>>& gens) {
  return groebner_basis(Ideal<K>(nvars, gens));
}

// re-running the construction on a reduced basis must return it unchanged
template <class K>
bool s_polys_reduce_to_zero(const Groebner<K>& gb) {
  for (size_t i = 0; i < gb.g.size(); ++i)
    for (size_t j = i + 1; j < gb.g.size(); ++j)
      if (!normal_form(s_poly(gb.g[i], gb.g[j]), gb.g).zero_poly()) return false;
  return true;
}

// Krull dimension of the affine zero set, read off the leading-term
// staircase: the dimension equals the largest set S of variables such that
// no leading monomial involves only variables from S. Valid for grevlex
// because the order is degree compatible. Unit ideal gives -1, the empty
// basis (zero ideal) gives the ambient dimension.
template <class K>
int ideal_dimension(const Groebner<K>& gb) {
  size_t n = gb.nvars;
  if (n > 24) throw std::invalid_argument("dimension search limited to 24 variables");
  if (gb.g.empty()) return static_cast<int>(n);
  if (gb.trivial()) return -1;
  std::vector<uint32_t> supports;
  supports.reserve(gb.g.size());
  for (auto& p : gb.g) {
    uint32_t mask = 0;
    for (size_t v = 0; v < n; ++v)
      if (p.lead().m.e[v]) mask |= (1u << v);
    supports.push_back(mask);
  }
  int best = 0;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (uint32_t sup : supports) {
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

template <class K>
int ideal_dimension(const Ideal<K>& ideal) {
  return ideal_dimension(groebner_basis(ideal));
}

// Number of standard monomials (monomials outside the leading-term ideal).
// Finite exactly when the quotient is a finite-dimensional vector space, in
// which case it equals the degree of the zero-dimensional scheme. Returns
// nullopt when the count exceeds `cap`.
template <class K>
std::optional<long> quotient_dimension(const Groebner<K>& gb, long cap = 200000) {
  if (gb.g.empty()) return std::nullopt;
  if (gb.trivial()) return 0;
  auto reducible = [&](const Monomial& m) {
    for (auto& p : gb.g)
      if (divides(p.lead().m, m)) return true;
    return false;
  };
  std::set<std::vector<uint16_t>> seen;
  std::vector<Monomial> frontier;
  Monomial one(gb.nvars);
  if (reducible(one)) return 0;
  frontier.push_back(one);
  seen.insert(one.e);
  long count = 0;
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    ++count;
    if (count > cap) return std::nullopt;
    for (size_t v = 0; v < gb.nvars; ++v) {
      Monomial m2 = m;
      m2.e[v] += 1;
      m2.deg += 1;
      if (seen.count(m2.e) || reducible(m2)) continue;
      seen.insert(m2.e);
      frontier.push_back(m2);
    }
  }
  return count;
}

struct RegularSequenceReport {
  bool regular = false;
  int failed_prefix = 0;              // 1-based length of the first bad prefix, 0 if none
  std::vector<int> prefix_dimensions;
};

// Geometric regular-sequence test: each length-j prefix must cut the affine
// space down to dimension exactly N - j.
template <class K>
RegularSequenceReport is_regular_sequence(const std::vector<Poly<K>>& polys, size_t ambient_dim) {
  for (auto& p : polys) {
    if (p.nvars() != ambient_dim) throw std::invalid_argument("polynomial in wrong ring");
    if (!is_zero(p.constant_term()))
      throw std::invalid_argument("not in the maximal ideal");
  }
  RegularSequenceReport rep;
  rep.regular = true;
  std::vector<Poly<K>> prefix;
  Groebner<K> gb;
  gb.nvars = ambient_dim;
  for (size_t j = 0; j < polys.size(); ++j) {
    std::vector<Poly<K>> gens = gb.g;
    gens.push_back(polys[j]);
    gb = groebner_basis<K>(ambient_dim, gens);
    int dim = ideal_dimension(gb);
    rep.prefix_dimensions.push_back(dim);
    if (dim != static_cast<int>(ambient_dim) - static_cast<int>(j) - 1) {
      rep.regular = false;
      rep.failed_prefix = static_cast<int>(j) + 1;
      return rep;
    }
  }
  return rep;
}

// All monomials of total degree exactly d in n variables.
std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t d);

// Multiplicity of a zero-dimensional-at-the-origin locus: the vector space
// dimension of the local ring at 0 modulo the ideal. Computed by saturating
// with powers of the maximal ideal until the staircase count stabilizes,
// which removes the components away from the origin exactly.
template <class K>
long local_multiplicity_at_origin(const std::vector<Poly<K>>& gens, size_t nvars,
                                  const K& one_coeff, int max_power = 40) {
  long prev = -1;
  for (int t = 1; t <= max_power; ++t) {
    std::vector<Poly<K>> aug = gens;
    for (auto& m : monomials_of_degree(nvars, static_cast<uint32_t>(t)))
      aug.push_back(Poly<K>::term(m, one_coeff));
    auto gb = groebner_basis<K>(nvars, aug);
    auto cnt = quotient_dimension(gb);
    if (!cnt) throw std::runtime_error("local multiplicity: quotient not finite");
    if (*cnt == prev) return prev;
    prev = *cnt;
  }
  throw std::runtime_error("local multiplicity did not stabilize");
}

}  // namespace fano
