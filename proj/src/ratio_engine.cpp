#include "fano/ratio_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fano {

namespace {

std::vector<LinForm> all_constraints(const ConeRegion& region) {
  std::vector<LinForm> cons;
  for (size_t i = 0; i < region.n(); ++i) {
    LinForm e(region.n());
    e.c[i] = 1;
    cons.push_back(e);
  }
  for (auto& g : region.constraints) cons.push_back(g);
  return cons;
}

std::vector<Rat> apply_basis(const std::vector<Rat>& x0,
                             const std::vector<std::vector<Rat>>& basis,
                             const std::vector<Rat>& t) {
  std::vector<Rat> x = x0;
  for (size_t k = 0; k < basis.size(); ++k)
    for (size_t i = 0; i < x.size(); ++i) x[i] += t[k] * basis[k][i];
  for (auto& v : x) v.canonicalize();
  return x;
}

}  // namespace

SliceMinimum minimize_on_slice(const QuadForm& q, const ConeRegion& region) {
  const size_t n = region.n();
  if (q.n() != n) throw std::invalid_argument("form does not match the region");
  if (n == 0) throw std::invalid_argument("empty variable list");
  if (n + region.constraints.size() > 20) throw std::invalid_argument("too many constraints");

  auto cons = all_constraints(region);
  const size_t m = cons.size();

  SliceMinimum out;
  bool have = false;

  auto consider = [&](const std::vector<Rat>& x, bool vertex) {
    if (!region.contains(x)) return;
    Rat val = q.eval(x);
    if (vertex) {
      bool dup = false;
      for (auto& v : out.vertices)
        if (v == x) dup = true;
      if (!dup) out.vertices.push_back(x);
    }
    if (!have || val < out.value) {
      have = true;
      out.value = val;
      out.argmin = x;
      out.attained_at.clear();
      out.attained_at.push_back(x);
    } else if (val == out.value) {
      bool dup = false;
      for (auto& p : out.attained_at)
        if (p == x) dup = true;
      if (!dup) out.attained_at.push_back(x);
    }
  };

  // every subset of tight constraints spans a candidate face
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    A.emplace_back(n, Rat(1));  // slice: sum x = 1
    b.emplace_back(1);
    for (size_t j = 0; j < m; ++j) {
      if (!(mask & (1u << j))) continue;
      A.push_back(cons[j].c);
      b.emplace_back(0);
    }
    auto sol = solve_affine(A, b);
    if (!sol) continue;
    const auto& basis = sol->kernel;
    if (basis.empty()) {
      consider(sol->particular, true);
      continue;
    }
    // stationary point of q restricted to the affine hull of the face
    const size_t k = basis.size();
    std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> rhs(k, Rat(0));
    // M_{ab} = basis_a^T Q basis_b ; rhs_a = -basis_a^T Q x0
    for (size_t aidx = 0; aidx < k; ++aidx) {
      for (size_t bidx = 0; bidx < k; ++bidx) {
        Rat acc(0);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) acc += basis[aidx][i] * q.a[i][j] * basis[bidx][j];
        acc.canonicalize();
        M[aidx][bidx] = acc;
      }
      Rat acc(0);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) acc += basis[aidx][i] * q.a[i][j] * sol->particular[j];
      acc.canonicalize();
      rhs[aidx] = -acc;
    }
    auto t = solve_unique(M, rhs);
    if (!t) continue;  // flat or saddle directions; boundary faces cover it
    consider(apply_basis(sol->particular, basis, *t), false);
  }

  if (!have) {
    out.empty_region = true;
    return out;
  }
  return out;
}

QuadForm SosIdentity::reconstruct(size_t n) const {
  QuadForm q(n);
  for (auto& s : squares) q = q + QuadForm::square(s.lin).scaled(s.coeff);
  for (auto& p : products) {
    QuadForm t(n);
    t.add_coeff(p.i, p.j, p.coeff);
    q = q + t;
  }
  return q;
}

std::optional<SosIdentity> find_sos(const QuadForm& q) {
  const size_t n = q.n();
  // nonnegative monomial combination: every Gram entry >= 0
  {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j)
        if (sgn(q.a[i][j]) < 0) ok = false;
    if (ok) {
      SosIdentity id;
      id.kind = "nonneg-monomials";
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
          Rat c = i == j ? q.a[i][i] : q.a[i][j] * 2;
          c.canonicalize();
          if (sgn(c) != 0) id.products.push_back({c, i, j});
        }
      id.valid = id.reconstruct(n) == q;
      if (id.valid) return id;
    }
  }
  // LDL^T with diagonal pivoting; succeeds exactly when the form is PSD
  {
    QuadForm w = q;
    SosIdentity id;
    id.kind = "psd-ldl";
    std::vector<char> done(n, 0);
    for (size_t step = 0; step < n; ++step) {
      size_t piv = n;
      for (size_t i = 0; i < n; ++i)
        if (!done[i] && sgn(w.a[i][i]) > 0) {
          piv = i;
          break;
        }
      if (piv == n) {
        // remaining diagonal all zero (or negative); PSD forces the rest zero
        for (size_t i = 0; i < n; ++i) {
          if (done[i]) continue;
          if (sgn(w.a[i][i]) != 0) return std::nullopt;
          for (size_t j = 0; j < n; ++j)
            if (!done[j] && sgn(w.a[i][j]) != 0) return std::nullopt;
        }
        break;
      }
      Rat d = w.a[piv][piv];
      LinForm l(n);
      for (size_t j = 0; j < n; ++j) {
        l.c[j] = w.a[piv][j] / d;
        l.c[j].canonicalize();
      }
      id.squares.push_back({d, l});
      QuadForm sub = QuadForm::square(l).scaled(d);
      w = w - sub;
      done[piv] = 1;
    }
    id.valid = id.reconstruct(n) == q;
    if (id.valid) return id;
  }
  return std::nullopt;
}

const char* verdict_name(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::BoundHolds: return "bound-holds";
    case ClaimVerdict::BoundHoldsWithEquality: return "bound-holds-with-equality";
    case ClaimVerdict::BoundFails: return "bound-fails";
    case ClaimVerdict::VacuousEmptyRegion: return "vacuous-empty-region";
  }
  return "?";
}

namespace {

// continued-fraction convergents of a double, candidates for snapping the
// Dinkelbach iteration onto the exact rational minimum
std::vector<Rat> cf_convergents(double x, int max_terms = 24) {
  std::vector<Rat> out;
  if (!std::isfinite(x)) return out;
  Int p0(0), q0(1), p1(1), q1(0);
  double v = x;
  for (int k = 0; k < max_terms; ++k) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) break;
    Int a(static_cast<long>(fl));
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > Int(1000000000)) break;
    Rat r(p2, q2);
    r.canonicalize();
    out.push_back(r);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = v - fl;
    if (rem < 1e-12) break;
    v = 1.0 / rem;
  }
  return out;
}

}  // namespace

std::optional<Rat> exact_ratio_min(const QuadraticRatioClaim& claim,
                                   std::vector<std::vector<long long>>* rays) {
  const auto& region = claim.region;
  auto ratio_at = [&](const std::vector<Rat>& x) -> std::optional<Rat> {
    Rat d = claim.den.eval(x);
    if (sgn(d) <= 0) return std::nullopt;
    Rat r = claim.num.eval(x) / d;
    r.canonicalize();
    return r;
  };

  // certified when min(N - theta D) = 0: the bound holds and is attained
  auto probe = [&](const Rat& theta) -> std::optional<SliceMinimum> {
    QuadForm q = claim.num - claim.den.scaled(theta);
    auto m = minimize_on_slice(q, region);
    if (m.empty_region) return std::nullopt;
    return m;
  };

  auto base = minimize_on_slice(claim.den, region);
  if (base.empty_region) return std::nullopt;

  std::optional<Rat> theta;
  for (auto& v : base.vertices) {
    auto r = ratio_at(v);
    if (r && (!theta || *r < *theta)) theta = r;
  }
  if (!theta) {
    // no vertex with positive denominator; try the barycenter
    std::vector<Rat> bary(region.n(), Rat(0));
    for (auto& v : base.vertices)
      for (size_t i = 0; i < bary.size(); ++i) bary[i] += v[i];
    for (auto& c : bary) {
      c /= Rat(static_cast<long>(base.vertices.size()));
      c.canonicalize();
    }
    theta = ratio_at(bary);
    if (!theta) return std::nullopt;
  }

  Rat last = *theta;
  for (int iter = 0; iter < 48; ++iter) {
    auto m = probe(last);
    if (!m) return std::nullopt;
    if (sgn(m->value) == 0) {
      if (rays) {
        rays->clear();
        for (auto& p : m->attained_at) rays->push_back(integer_ray(p));
      }
      return last;
    }
    if (sgn(m->value) > 0) break;  // theta below the true minimum; snap below
    auto r = ratio_at(m->argmin);
    if (!r) return std::nullopt;  // ratio unbounded below along a D = 0 ray
    if (*r >= last) break;        // no exact progress; snap
    last = *r;
  }

  // snap via continued-fraction convergents of the numeric estimate
  for (auto& cand : cf_convergents(rat_double(last))) {
    auto m = probe(cand);
    if (m && sgn(m->value) == 0) {
      if (rays) {
        rays->clear();
        for (auto& p : m->attained_at) rays->push_back(integer_ray(p));
      }
      return cand;
    }
  }
  return std::nullopt;
}

Certificate verify_ratio_bound(const QuadraticRatioClaim& claim) {
  if (claim.region.n() == 0) throw std::invalid_argument("claim has no variables");
  Certificate cert;
  cert.claim = claim;

  auto dmin = minimize_on_slice(claim.den, claim.region);
  if (dmin.empty_region) {
    cert.verdict = ClaimVerdict::VacuousEmptyRegion;
    cert.satisfied = true;
    cert.min_gap = 0;
    cert.notes = "region has no points besides the origin";
    return cert;
  }
  if (sgn(dmin.value) < 0)
    throw std::domain_error("denominator not positive on cone");
  if (sgn(dmin.value) == 0)
    for (auto& p : dmin.attained_at) cert.den_zero_rays.push_back(integer_ray(p));

  QuadForm gap = claim.num - claim.den.scaled(claim.bound);
  auto m = minimize_on_slice(gap, claim.region);
  cert.min_gap = m.value;
  cert.min_point = m.argmin;

  if (sgn(m.value) < 0) {
    cert.verdict = ClaimVerdict::BoundFails;
    cert.satisfied = false;
    cert.violating_ray = integer_ray(m.argmin);
  } else if (sgn(m.value) == 0) {
    cert.verdict = ClaimVerdict::BoundHoldsWithEquality;
    cert.satisfied = !claim.strict;
    for (auto& p : m.attained_at) cert.equality_rays.push_back(integer_ray(p));
  } else {
    cert.verdict = ClaimVerdict::BoundHolds;
    cert.satisfied = true;
  }

  std::vector<std::vector<long long>> rays;
  cert.ratio_min = exact_ratio_min(claim, &rays);
  if (cert.ratio_min) cert.ratio_min_rays = rays;

  if (sgn(m.value) >= 0) cert.sos = find_sos(gap);
  return cert;
}

bool Certificate::revalidate() const {
  auto slice_point_ok = [&](const std::vector<Rat>& x) {
    Rat s(0);
    for (auto& v : x) s += v;
    return s == 1 && claim.region.contains(x);
  };
  QuadForm gap = claim.num - claim.den.scaled(claim.bound);
  if (verdict == ClaimVerdict::VacuousEmptyRegion) return true;
  if (!slice_point_ok(min_point)) return false;
  if (gap.eval(min_point) != min_gap) return false;
  if (verdict == ClaimVerdict::BoundFails) {
    if (violating_ray.empty()) return false;
    std::vector<Rat> x;
    for (auto v : violating_ray) x.emplace_back(static_cast<long>(v));
    if (!(claim.num.eval(x) < claim.bound * claim.den.eval(x))) return false;
  }
  for (auto& ray : equality_rays) {
    std::vector<Rat> x;
    for (auto v : ray) x.emplace_back(static_cast<long>(v));
    if (claim.num.eval(x) != claim.bound * claim.den.eval(x)) return false;
  }
  if (ratio_min) {
    for (auto& ray : ratio_min_rays) {
      std::vector<Rat> x;
      for (auto v : ray) x.emplace_back(static_cast<long>(v));
      if (claim.num.eval(x) != *ratio_min * claim.den.eval(x)) return false;
    }
  }
  if (sos && sos->valid) {
    if (!(sos->reconstruct(claim.region.n()) == gap)) return false;
    for (auto& s : sos->squares)
      if (sgn(s.coeff) < 0) return false;
    for (auto& p : sos->products)
      if (sgn(p.coeff) < 0) return false;
  }
  return true;
}

}  // namespace fano
