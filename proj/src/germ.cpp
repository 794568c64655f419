#include "fano/germ.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "fano/parallel.hpp"
#include "fano/poly_io.hpp"

namespace fano {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string point_str(const std::vector<Fp>& y) {
  std::string s = "(";
  for (size_t i = 0; i < y.size(); ++i) {
    if (i) s += ":";
    s += std::to_string(y[i].value());
  }
  return s + ")";
}

// substitute the pivot variable of the linear form L into p, dropping that
// variable from the ring
template <class K>
Poly<K> eliminate_linear(const Poly<K>& p, const Poly<K>& L, size_t pivot) {
  const size_t n = p.nvars();
  K pivot_coeff{};
  Poly<K> rest(n);  // L minus the pivot term
  for (auto& t : L.terms()) {
    if (t.m.deg != 1) throw std::invalid_argument("not a linear form");
    size_t v = 0;
    while (t.m.e[v] == 0) ++v;
    if (v == pivot)
      pivot_coeff = t.c;
    else
      rest = rest + Poly<K>::term(t.m, t.c);
  }
  if (is_zero(pivot_coeff)) throw std::invalid_argument("pivot absent from linear form");
  // z_pivot = -rest / c, then drop the pivot slot
  Poly<K> repl = rest.scaled(-inv(pivot_coeff));

  auto drop = [&](const Monomial& m) {
    Monomial r(n - 1);
    uint32_t d = 0;
    for (size_t i = 0, j = 0; i < n; ++i) {
      if (i == pivot) continue;
      r.e[j] = m.e[i];
      d += m.e[i];
      ++j;
    }
    r.deg = d;
    return r;
  };
  Poly<K> repl_small(n - 1);
  {
    std::vector<typename Poly<K>::Term> ts;
    for (auto& t : repl.terms()) ts.push_back({drop(t.m), t.c});
    repl_small = make_poly<K>(n - 1, std::move(ts));
  }

  // Horner in the pivot variable
  uint16_t maxk = 0;
  for (auto& t : p.terms()) maxk = std::max(maxk, t.m.e[pivot]);
  std::vector<Poly<K>> buckets(maxk + 1, Poly<K>(n - 1));
  for (auto& t : p.terms()) {
    Monomial m = t.m;
    uint16_t k = m.e[pivot];
    m.e[pivot] = 0;
    m.deg -= k;
    buckets[k] = buckets[k] + Poly<K>::term(drop(m), t.c);
  }
  Poly<K> out = buckets[maxk];
  for (int k = maxk - 1; k >= 0; --k) out = out * repl_small + buckets[k];
  return out;
}

struct PointCheck {
  bool ok = true;
  std::string witness;
};

// Definition 1 for the tangent cone at one of its points
PointCheck def1_at_cone_point(const HypersurfaceGerm<Fp>& g, const std::vector<Fp>& y) {
  auto rc = recenter(tangent_cone(g), y);
  int k = std::min(g.mu, g.M - 2);
  std::vector<PolyFp> seq;
  for (int d = 1; d <= k; ++d) seq.push_back(rc.f.graded_part(static_cast<uint32_t>(d)));
  auto rep = is_regular_sequence(seq, static_cast<size_t>(g.M - 1));
  if (rep.regular) return {};
  return {false, "cone not regular at " + point_str(y) + ": prefix of length " +
                     std::to_string(rep.failed_prefix) + " has dimension " +
                     std::to_string(rep.prefix_dimensions.back())};
}

PointCheck cond_iii_at_point(const HypersurfaceGerm<Fp>& g, const std::vector<Fp>& y, int top) {
  const size_t M = static_cast<size_t>(g.M);
  PolyFp cone = tangent_cone(g);
  PolyFp g1 = polar_form(cone, y, 1);
  if (g1.zero_poly())
    return {false, "cone singular at sampled point " + point_str(y)};
  PolyFp g2 = polar_form(cone, y, 2);
  std::vector<PolyFp> gens = {cone, g2};
  for (int d = g.mu + 1; d <= top; ++d) gens.push_back(g.part(d));

  size_t pivot = 0;
  for (size_t v = M; v-- > 0;) {
    Monomial m(M);
    m.e[v] = 1;
    m.deg = 1;
    if (!is_zero(g1.coeff(m))) {
      pivot = v;
      break;
    }
  }
  std::vector<PolyFp> reduced;
  for (auto& p : gens) reduced.push_back(eliminate_linear(p, g1, pivot));
  int dim = ideal_dimension(groebner_basis<Fp>(M - 1, reduced));
  int expected = g.M - (3 + top - g.mu);
  if (dim == expected) return {};
  return {false, "at " + point_str(y) + " the tangent-quadric intersection has affine dimension " +
                     std::to_string(dim) + ", expected " + std::to_string(expected)};
}

}  // namespace

std::vector<Fp> sample_hypersurface_point(const Poly<Fp>& form, Rng& rng) {
  const size_t n = form.nvars();
  if (form.zero_poly()) throw std::invalid_argument("cannot sample points of the zero form");
  const int64_t p = form.lead().c.modulus();
  for (int attempt = 0; attempt < 200; ++attempt) {
    size_t solve = attempt % n;
    size_t unit = (solve + 1) % n;
    std::vector<Fp> x(n);
    for (size_t i = 0; i < n; ++i) {
      if (i == solve) continue;
      x[i] = (i == unit) ? Fp(1, p) : Fp(static_cast<int64_t>(rng.below(p)), p);
    }
    // univariate in the solved coordinate
    uint16_t maxdeg = 0;
    for (auto& t : form.terms()) maxdeg = std::max(maxdeg, t.m.e[solve]);
    std::vector<Fp> coeff(maxdeg + 1, Fp(0, p));
    for (auto& t : form.terms()) {
      Fp c = t.c;
      for (size_t i = 0; i < n; ++i) {
        if (i == solve) continue;
        for (uint16_t k = 0; k < t.m.e[i]; ++k) c = c * x[i];
      }
      coeff[t.m.e[solve]] += c;
    }
    bool all_zero = true;
    for (auto& c : coeff)
      if (!c.zero()) all_zero = false;
    if (all_zero) {
      x[solve] = Fp(static_cast<int64_t>(rng.below(p)), p);
      return x;
    }
    int64_t offset = static_cast<int64_t>(rng.below(p));
    for (int64_t k = 0; k < p; ++k) {
      Fp t(static_cast<int64_t>((offset + k) % p), p);
      Fp v(0, p);
      for (size_t j = coeff.size(); j-- > 0;) v = v * t + coeff[j];
      if (v.zero()) {
        x[solve] = t;
        return x;
      }
    }
  }
  throw std::runtime_error("failed to sample a point on the hypersurface");
}

template <class K>
Poly<K> polar_form(const Poly<K>& q, const std::vector<K>& y, int d) {
  const size_t n = q.nvars();
  if (y.size() != n) throw std::invalid_argument("point in wrong space");
  const K proto = q.zero_poly() ? K() : q.lead().c;
  std::vector<typename Poly<K>::Term> terms;
  for (auto& m : monomials_of_degree(n, static_cast<uint32_t>(d))) {
    Poly<K> der = q;
    long fact = 1;
    for (size_t v = 0; v < n; ++v) {
      for (uint16_t k = 0; k < m.e[v]; ++k) der = der.derivative(v);
      for (uint16_t k = 2; k <= m.e[v]; ++k) fact *= k;
    }
    if (der.zero_poly()) continue;
    K c = der.eval(y) * inv(scalar_from_long(fact, proto));
    if (!is_zero(c)) terms.push_back({m, c});
  }
  return make_poly<K>(n, std::move(terms));
}

template Poly<Fp> polar_form(const Poly<Fp>&, const std::vector<Fp>&, int);
template Poly<Rat> polar_form(const Poly<Rat>&, const std::vector<Rat>&, int);

RegularityReport check_regularity(const HypersurfaceGerm<Fp>& g, int sample_count, uint64_t seed,
                                  int threads) {
  RegularityOptions opt;
  opt.sample_count = sample_count;
  opt.seed = seed;
  opt.threads = threads;
  return check_regularity(g, opt);
}

RegularityReport check_regularity(const HypersurfaceGerm<Fp>& g, const RegularityOptions& opt) {
  if (g.mu < 2 || g.mu > g.M - 2) throw std::invalid_argument("not a supported singular germ");
  const size_t M = static_cast<size_t>(g.M);
  const int sample_count = opt.sample_count;
  const uint64_t seed = opt.seed;
  const int threads = opt.threads;
  RegularityReport rep;

  // (i) the graded parts form a regular sequence
  if (!opt.run_i) {
    rep.cond_i.verdict = Verdict::Skipped;
  } else {
    std::vector<PolyFp> seq;
    for (int d = g.mu; d <= g.M; ++d) seq.push_back(g.part(d));
    auto rs = is_regular_sequence(seq, M);
    if (rs.regular) {
      rep.cond_i.verdict = Verdict::Pass;
    } else {
      rep.cond_i.verdict = Verdict::Fail;
      rep.cond_i.witness = "prefix q_" + std::to_string(g.mu) + "..q_" +
                           std::to_string(g.mu + rs.failed_prefix - 1) + " has affine dimension " +
                           std::to_string(rs.prefix_dimensions.back()) + ", expected " +
                           std::to_string(g.M - rs.failed_prefix);
    }
  }

  // (ii) tangent cone smooth, and regular at sampled points
  bool smooth = true;
  if (!opt.run_ii) {
    rep.cond_ii.verdict = Verdict::Skipped;
  } else {
    PolyFp cone = tangent_cone(g);
    std::vector<PolyFp> jac;
    for (size_t v = 0; v < M; ++v) jac.push_back(cone.derivative(v));
    int dim = ideal_dimension(groebner_basis<Fp>(M, jac));
    smooth = dim <= 0;
    if (!smooth) {
      rep.cond_ii.verdict = Verdict::Fail;
      rep.cond_ii.witness =
          "tangent cone singular locus has affine dimension " + std::to_string(dim);
    } else if (sample_count <= 0) {
      rep.cond_ii.verdict = Verdict::Skipped;
      rep.cond_ii.witness = "cone smooth; point sampling skipped";
    } else {
      auto checks = parallel_map<PointCheck>(
          static_cast<size_t>(sample_count), threads, [&](size_t idx) {
            Rng rng = Rng(seed).fork(idx);
            auto y = sample_hypersurface_point(tangent_cone(g), rng);
            return def1_at_cone_point(g, y);
          });
      rep.cond_ii.verdict = Verdict::Pass;
      for (auto& c : checks) {
        if (!c.ok) {
          rep.cond_ii.verdict = Verdict::Fail;
          rep.cond_ii.witness = c.witness;
          break;
        }
      }
    }
  }

  // (iii) applies for mu 3,4 with M >= 7 and for mu 3, M = 6 with q_5; the
  // paper does not state the mu 4, M 6 case, so it stays not-applicable
  bool applicable = (g.mu == 3 || g.mu == 4) && (g.M >= 7 || (g.mu == 3 && g.M == 6));
  if (!applicable) {
    rep.cond_iii.verdict = Verdict::NotApplicable;
    if (g.mu == 4 && g.M == 6) rep.cond_iii.witness = "status of mu=4, M=6 not stated";
  } else if (!opt.run_iii) {
    rep.cond_iii.verdict = Verdict::Skipped;
  } else if (!smooth) {
    rep.cond_iii.verdict = Verdict::Skipped;
    rep.cond_iii.witness = "needs a smooth tangent cone";
  } else if (sample_count <= 0) {
    rep.cond_iii.verdict = Verdict::Skipped;
    rep.cond_iii.witness = "point sampling skipped";
  } else {
    int top = (g.mu == 3 && g.M == 6) ? 5 : 6;
    auto checks = parallel_map<PointCheck>(
        static_cast<size_t>(sample_count), threads, [&](size_t idx) {
          Rng rng = Rng(seed).fork(1000 + idx);
          auto y = sample_hypersurface_point(tangent_cone(g), rng);
          return cond_iii_at_point(g, y, top);
        });
    rep.cond_iii.verdict = Verdict::Pass;
    for (auto& c : checks) {
      if (!c.ok) {
        rep.cond_iii.verdict = Verdict::Fail;
        rep.cond_iii.witness = c.witness;
        break;
      }
    }
  }

  if (g.mu == 2)
    rep.note = "mu = 2 germ checked for bookkeeping; the exclusion of double points is quoted, "
               "not recomputed";
  return rep;
}

RegularityReport check_regularity(const HypersurfaceGerm<Rat>& g, int sample_count, uint64_t seed,
                                  int threads) {
  (void)seed;
  (void)threads;
  if (g.mu < 2 || g.mu > g.M - 2) throw std::invalid_argument("not a supported singular germ");
  const size_t M = static_cast<size_t>(g.M);
  RegularityReport rep;
  {
    std::vector<PolyQ> seq;
    for (int d = g.mu; d <= g.M; ++d) seq.push_back(g.part(d));
    auto rs = is_regular_sequence(seq, M);
    rep.cond_i.verdict = rs.regular ? Verdict::Pass : Verdict::Fail;
    if (!rs.regular)
      rep.cond_i.witness = "prefix of length " + std::to_string(rs.failed_prefix) +
                           " has affine dimension " + std::to_string(rs.prefix_dimensions.back());
  }
  {
    PolyQ cone = tangent_cone(g);
    std::vector<PolyQ> jac;
    for (size_t v = 0; v < M; ++v) jac.push_back(cone.derivative(v));
    int dim = ideal_dimension(groebner_basis<Rat>(M, jac));
    if (dim > 0) {
      rep.cond_ii.verdict = Verdict::Fail;
      rep.cond_ii.witness =
          "tangent cone singular locus has affine dimension " + std::to_string(dim);
    } else {
      rep.cond_ii.verdict = Verdict::Skipped;
      rep.cond_ii.witness = "cone smooth; point sampling requires a prime field";
    }
  }
  bool applicable = (g.mu == 3 || g.mu == 4) && (g.M >= 7 || (g.mu == 3 && g.M == 6));
  rep.cond_iii.verdict = applicable ? Verdict::Skipped : Verdict::NotApplicable;
  if (applicable) rep.cond_iii.witness = "point sampling requires a prime field";
  return rep;
}

template <class K>
RegularityReport check_smooth_regularity(const HypersurfaceGerm<K>& g) {
  if (multiplicity(g) != 1) throw std::invalid_argument("not a smooth germ");
  RegularityReport rep;
  int k = std::min(g.M, g.M - 1);  // degree M hypersurface in P^M
  std::vector<Poly<K>> seq;
  for (int d = 1; d <= k; ++d) seq.push_back(g.part(d));
  auto rs = is_regular_sequence(seq, static_cast<size_t>(g.M));
  rep.def1.verdict = rs.regular ? Verdict::Pass : Verdict::Fail;
  if (!rs.regular)
    rep.def1.witness = "prefix q_1..q_" + std::to_string(rs.failed_prefix) +
                       " has affine dimension " + std::to_string(rs.prefix_dimensions.back()) +
                       ", expected " + std::to_string(g.M - rs.failed_prefix);
  return rep;
}

template RegularityReport check_smooth_regularity(const HypersurfaceGerm<Fp>&);
template RegularityReport check_smooth_regularity(const HypersurfaceGerm<Rat>&);

Rat hypertangent_ratio(int i, int mu, int M) {
  if (i < mu || i > M - 1) throw std::invalid_argument("hypertangent index out of range");
  return Rat(i + 1) * Rat(mu) / (Rat(i) * Rat(M));
}

Rat chain_factor(const std::vector<int>& indices, int mu, int M, int mu_over_M_power) {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k + 1 < sorted.size(); ++k)
    if (sorted[k] == sorted[k + 1]) throw std::invalid_argument("duplicate hypertangent index");
  Rat prod(1);
  for (int i : sorted) {
    if (i < mu || i > M - 1) throw std::invalid_argument("hypertangent index out of range");
    prod *= Rat(i + 1) / Rat(i);
  }
  for (int k = 0; k < mu_over_M_power; ++k) prod *= Rat(mu) / Rat(M);
  prod.canonicalize();
  return prod;
}

CycleRStats special_cycle_R_stats(int mu, int M) {
  if (mu < 2 || mu > M - 2) throw std::invalid_argument("mu out of range");
  Rat r(mu + 2, M);
  r.canonicalize();
  return {r, 1};
}

CycleTStats cycle_T_stats(int mu) {
  if (mu < 3) throw std::invalid_argument("cycle T needs mu >= 3");
  return {2L * mu, 6L};
}

CycleTVerification cycle_T_verify(const Poly<Fp>& cone, uint64_t seed) {
  const size_t M = cone.nvars();
  if (M < 5) throw std::invalid_argument("need at least 5 coordinates");
  const int64_t p = cone.lead().c.modulus();
  Rng rng(seed);
  auto y = sample_hypersurface_point(cone, rng);
  PolyFp g1 = polar_form(cone, y, 1);
  if (g1.zero_poly()) throw std::runtime_error("cone singular at sampled point");
  PolyFp g2 = polar_form(cone, y, 2);

  CycleTVerification out;
  out.point = y;

  // degree: generic zero-dimensional slice of the projective cycle
  {
    std::vector<PolyFp> gens = {cone, g1, g2};
    FpCtx ctx{p};
    for (size_t k = 0; k + 4 < M; ++k) gens.push_back(random_form(M, 1, ctx, rng));
    PolyFp dehom = random_form(M, 1, ctx, rng) - Poly<Fp>::constant(M, Fp(1, p));
    gens.push_back(dehom);
    auto cnt = quotient_dimension(groebner_basis<Fp>(M, gens));
    if (!cnt) throw std::runtime_error("degree slice not zero-dimensional");
    out.deg = *cnt;
  }

  // multiplicity at y: local ring of the slice through y
  {
    auto fc = recenter(cone, y);
    auto f1 = recenter(g1, y);
    auto f2 = recenter(g2, y);
    std::vector<PolyFp> gens = {fc.f, f1.f, f2.f};
    FpCtx ctx{p};
    for (size_t k = 0; k + 4 < M; ++k) gens.push_back(random_form(M - 1, 1, ctx, rng));
    out.mult = local_multiplicity_at_origin(gens, M - 1, Fp(1, p));
  }
  return out;
}

HypersurfaceGerm<Fp> random_germ(int M, int mu, uint64_t seed, const FpCtx& ctx) {
  if (M < 5) throw std::invalid_argument("random germ needs M >= 5");
  if (mu < 2 || mu > M - 2) throw std::invalid_argument("mu out of range");
  Rng rng(seed);
  std::vector<PolyFp> parts;
  for (int d = mu; d <= M; ++d)
    parts.push_back(random_form(static_cast<size_t>(M), static_cast<uint32_t>(d), ctx, rng));
  return germ_from_parts(M, mu, parts);
}

HypersurfaceGerm<Rat> random_germ(int M, int mu, uint64_t seed, const RatCtx& ctx) {
  if (M < 5) throw std::invalid_argument("random germ needs M >= 5");
  if (mu < 2 || mu > M - 2) throw std::invalid_argument("mu out of range");
  Rng rng(seed);
  std::vector<PolyQ> parts;
  for (int d = mu; d <= M; ++d)
    parts.push_back(random_form(static_cast<size_t>(M), static_cast<uint32_t>(d), ctx, rng));
  return germ_from_parts(M, mu, parts);
}

GermData germ_read(std::istream& in) {
  GermData g;
  std::string line;
  bool have_header = false;
  std::vector<std::string> blocks(1);
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::string trimmed;
    for (char c : body)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) continue;
    if (!have_header) {
      std::istringstream hs(body);
      if (!(hs >> g.M >> g.mu))
        throw std::runtime_error("line " + std::to_string(lineno) + ": expected header 'M mu'");
      have_header = true;
      continue;
    }
    if (trimmed == "--") {
      blocks.emplace_back();
      continue;
    }
    blocks.back() += body + "\n";
  }
  if (!have_header) throw std::runtime_error("missing germ header");
  if (g.M < 2 || g.mu < 1 || g.mu > g.M) throw std::runtime_error("bad germ header");
  if (blocks.size() != static_cast<size_t>(g.M - g.mu + 1))
    throw std::runtime_error("expected " + std::to_string(g.M - g.mu + 1) +
                             " graded parts, got " + std::to_string(blocks.size()));
  for (auto& b : blocks) g.parts.push_back(poly_parse_string(b, static_cast<size_t>(g.M)));
  return g;
}

void germ_write(std::ostream& out, const GermData& g) {
  out << g.M << ' ' << g.mu << "\n";
  for (size_t k = 0; k < g.parts.size(); ++k) {
    if (k) out << "--\n";
    poly_print(out, g.parts[k]);
  }
}

HypersurfaceGerm<Fp> germ_to_fp(const GermData& g, int64_t prime) {
  std::vector<PolyFp> parts;
  for (auto& p : g.parts) parts.push_back(poly_to_fp(p, prime));
  return germ_from_parts(g.M, g.mu, parts);
}

HypersurfaceGerm<Rat> germ_to_rat(const GermData& g) {
  return germ_from_parts(g.M, g.mu, g.parts);
}

GermData germ_data_from_fp(const HypersurfaceGerm<Fp>& g) {
  GermData d;
  d.M = g.M;
  d.mu = g.mu;
  for (int k = g.mu; k <= g.M; ++k) d.parts.push_back(poly_lift(g.part(k)));
  return d;
}

}  // namespace fano
