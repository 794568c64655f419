#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "fano/groebner.hpp"
#include "fano/poly_io.hpp"
#include "fano/random_poly.hpp"
#include "fano/recenter.hpp"
#include "fano/rng.hpp"

using namespace fano;

namespace {

const int64_t kP = 32003;

PolyFp rand_poly(size_t nvars, uint32_t maxdeg, Rng& rng) {
  std::vector<PolyFp::Term> terms;
  int count = 1 + static_cast<int>(rng.below(8));
  for (int k = 0; k < count; ++k) {
    std::vector<uint16_t> e(nvars);
    for (auto& x : e) x = static_cast<uint16_t>(rng.below(maxdeg + 1));
    terms.push_back({Monomial(std::move(e)), Fp(static_cast<int64_t>(rng.below(kP)), kP)});
  }
  return make_poly<Fp>(nvars, std::move(terms));
}

// brute-force point count of V(polys) over a small prime field
long count_points(const std::vector<PolyQ>& polys, size_t nvars, int64_t p) {
  std::vector<int64_t> x(nvars, 0);
  long count = 0;
  while (true) {
    std::vector<Fp> pt;
    for (auto v : x) pt.emplace_back(v, p);
    bool on = true;
    for (auto& f : polys)
      if (!poly_to_fp(f, p).eval(pt).zero()) on = false;
    if (on) ++count;
    size_t i = 0;
    while (i < nvars && ++x[i] == p) x[i++] = 0;
    if (i == nvars) break;
  }
  return count;
}

}  // namespace

static_assert(!std::is_floating_point_v<Fp>, "exact arithmetic only");
static_assert(!std::is_floating_point_v<Rat>, "exact arithmetic only");

TEST_CASE("prime field axioms on random triples") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Fp a(static_cast<int64_t>(rng.below(kP)), kP);
    Fp b(static_cast<int64_t>(rng.below(kP)), kP);
    Fp c(static_cast<int64_t>(rng.below(kP)), kP);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.zero()) CHECK(a * inv(a) == Fp(1, kP));
    CHECK(a.value() >= 0);
    CHECK(a.value() < kP);
  }
  CHECK_THROWS(Fp(1, 4));       // not prime
  CHECK_THROWS(Fp(1, 2));       // even
  CHECK_THROWS(inv(Fp(0, kP)));
}

TEST_CASE("rational parsing covers integers, fractions and decimals") {
  CHECK(rat_parse("3/6") == rat(1, 2));
  CHECK(rat_parse("-14") == Rat(-14));
  CHECK(rat_parse("3.01") == rat(301, 100));
  CHECK_THROWS(rat_parse("1/0"));
}

TEST_CASE("polynomial arithmetic is exact, commutative and associative") {
  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    PolyFp a = rand_poly(3, 4, rng), b = rand_poly(3, 4, rng), c = rand_poly(3, 4, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).zero_poly());
    for (auto& t : (a * b).terms()) CHECK(!t.c.zero());  // no stored zeros
  }
}

TEST_CASE("graded parts sum back to the polynomial") {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    PolyFp f = rand_poly(4, 5, rng);
    PolyFp sum(4);
    for (uint32_t d = 0; d <= f.total_degree(); ++d) sum = sum + f.graded_part(d);
    CHECK(sum == f);
  }
  PolyQ f = poly_parse_string("1 1 0\n1 1 1\n");  // z1 + z1 z2
  CHECK(f.graded_part(2) == poly_parse_string("1 1 1\n"));
  CHECK(f.graded_part(3).zero_poly());
}

TEST_CASE("polynomial text format round-trips") {
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    PolyFp f = rand_poly(3, 6, rng);
    PolyQ lifted = poly_lift(f);
    PolyQ parsed = poly_parse_string(poly_to_text(lifted), 3);
    CHECK(parsed == lifted);
  }
  CHECK(poly_parse_string("# only a comment\n", 2).zero_poly());
  CHECK_THROWS(poly_parse_string("1 2\n1 2 3\n"));  // inconsistent field counts
}

TEST_CASE("recenter: quadric with known tangent") {
  // F = z0 z1 - z2^2 at x = (1,0,0): local equation z1 - z2^2
  PolyQ F = poly_parse_string("1 1 1 0\n-1 0 0 2\n");
  auto rc = recenter(F, {Rat(1), Rat(0), Rat(0)});
  CHECK(rc.chart == 0);
  CHECK(rc.f == poly_parse_string("1 1 0\n-1 0 2\n"));
  CHECK(rc.f.graded_part(1) == poly_parse_string("1 1 0\n"));
}

TEST_CASE("recenter: Fermat cubic at a smooth point has a differential") {
  // z0^3 + z1^3 + z2^3 + z3^3 at (1,-1,0,0)
  PolyQ F = poly_parse_string("1 3 0 0 0\n1 0 3 0 0\n1 0 0 3 0\n1 0 0 0 3\n");
  auto rc = recenter(F, {Rat(1), Rat(-1), Rat(0), Rat(0)});
  CHECK(!rc.f.graded_part(1).zero_poly());
  CHECK(is_zero(rc.f.constant_term()));
}

TEST_CASE("recenter: evaluation oracle over the prime field") {
  Rng rng(37);
  FpCtx ctx{kP};
  for (int trial = 0; trial < 5; ++trial) {
    PolyFp F = random_form(4, 3, ctx, rng);
    // pick a point on {F = 0} by solving along the last coordinate
    std::vector<Fp> x;
    for (int attempt = 0;; ++attempt) {
      REQUIRE(attempt < 200);
      std::vector<Fp> cand = {Fp(1, kP), Fp(static_cast<int64_t>(rng.below(kP)), kP),
                              Fp(static_cast<int64_t>(rng.below(kP)), kP), Fp(0, kP)};
      bool found = false;
      for (int64_t t = 0; t < kP; ++t) {
        cand[3] = Fp(t, kP);
        if (F.eval(cand).zero()) {
          found = true;
          break;
        }
      }
      if (found) {
        x = cand;
        break;
      }
    }
    auto rc = recenter(F, x);
    // f(u) must equal F(x + u-embedded) for random offsets u
    for (int k = 0; k < 20; ++k) {
      std::vector<Fp> u;
      for (int i = 0; i < 3; ++i) u.emplace_back(static_cast<int64_t>(rng.below(kP)), kP);
      std::vector<Fp> shifted = x;
      size_t slot = 0;
      for (size_t i = 0; i < 4; ++i) {
        if (i == rc.chart) continue;
        shifted[i] = shifted[i] + u[slot++];
      }
      CHECK(rc.f.eval(u) == F.eval(shifted));
    }
  }
}

TEST_CASE("recenter rejects points off the hypersurface") {
  PolyQ F = poly_parse_string("1 1 1 0\n-1 0 0 2\n");
  CHECK_THROWS_WITH_AS(recenter(F, {Rat(1), Rat(1), Rat(0)}), "point not on hypersurface",
                       std::invalid_argument);
}

TEST_CASE("groebner: textbook bases") {
  {
    PolyQ g1 = poly_parse_string("1 1 0\n", 2), g2 = poly_parse_string("1 0 1\n", 2);
    auto gb = groebner_basis<Rat>(2, {g1, g2});
    REQUIRE(gb.g.size() == 2);
    CHECK(gb.g[0] == poly_parse_string("1 0 1\n", 2));
    CHECK(gb.g[1] == poly_parse_string("1 1 0\n", 2));
  }
  {
    // (z1^2 - z2, z2^2): already a reduced grevlex basis, staircase {z1^2, z2^2}
    PolyQ g1 = poly_parse_string("1 2 0\n-1 0 1\n");
    PolyQ g2 = poly_parse_string("1 0 2\n");
    auto gb = groebner_basis<Rat>(2, {g1, g2});
    REQUIRE(gb.g.size() == 2);
    CHECK(gb.g[0] == g2);  // grevlex sorts z2^2 before z1^2
    CHECK(gb.g[1] == g1);
    CHECK(ideal_dimension(gb) == 0);
  }
  {
    PolyQ one = PolyQ::constant(2, Rat(1));
    auto gb = groebner_basis<Rat>(2, {one});
    REQUIRE(gb.g.size() == 1);
    CHECK(gb.trivial());
    CHECK(ideal_dimension(gb) == -1);
  }
  CHECK_THROWS(groebner_basis<Rat>(2, {}));
}

TEST_CASE("groebner: S-polynomials reduce to zero and the basis is idempotent") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PolyFp> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(rand_poly(3, 3, rng));
    bool any = false;
    for (auto& g : gens) any = any || !g.zero_poly();
    if (!any) continue;
    auto gb = groebner_basis<Fp>(3, gens);
    if (gb.g.empty()) continue;
    CHECK(s_polys_reduce_to_zero(gb));
    auto gb2 = groebner_basis<Fp>(3, gb.g);
    REQUIRE(gb2.g.size() == gb.g.size());
    for (size_t i = 0; i < gb.g.size(); ++i) CHECK(gb2.g[i] == gb.g[i]);
  }
}

TEST_CASE("ideal dimension: coordinate subspaces and the unit ideal") {
  const size_t N = 6;
  for (size_t k = 0; k <= N; ++k) {
    std::vector<PolyQ> gens;
    for (size_t i = 0; i < k; ++i) {
      Monomial m(N);
      m.e[i] = 1;
      m.deg = 1;
      gens.push_back(PolyQ::term(m, Rat(1)));
    }
    if (gens.empty()) continue;
    CHECK(ideal_dimension(groebner_basis<Rat>(N, gens)) == static_cast<int>(N - k));
  }
}

TEST_CASE("ideal dimension of (z1 z2) in three variables matches point counting") {
  PolyQ f = poly_parse_string("1 1 1 0\n");
  CHECK(ideal_dimension(groebner_basis<Rat>(3, {f})) == 2);
  // independent oracle: |V(f)(F_p)| grows like p^dim
  long c7 = count_points({f}, 3, 7);
  long c13 = count_points({f}, 3, 13);
  double est = std::log(double(c13) / double(c7)) / std::log(13.0 / 7.0);
  CHECK(std::lround(est) == 2);
}

TEST_CASE("regular sequences: coordinates pass, zero divisors fail") {
  auto var = [](size_t n, size_t i) {
    Monomial m(n);
    m.e[i] = 1;
    m.deg = 1;
    return PolyQ::term(m, Rat(1));
  };
  {
    auto rep = is_regular_sequence<Rat>({var(5, 0), var(5, 1), var(5, 2)}, 5);
    CHECK(rep.regular);
    CHECK(rep.prefix_dimensions == std::vector<int>{4, 3, 2});
  }
  {
    // (z1, z1 z2): the second element cuts nothing new on {z1 = 0}
    PolyQ z1z2 = poly_parse_string("1 1 1\n", 2);
    auto rep = is_regular_sequence<Rat>({var(2, 0), z1z2}, 2);
    CHECK(!rep.regular);
    CHECK(rep.failed_prefix == 2);
  }
  CHECK_THROWS_WITH_AS(
      is_regular_sequence<Rat>({PolyQ::constant(2, Rat(1))}, 2), "not in the maximal ideal",
      std::invalid_argument);
}

TEST_CASE("regular sequence of a recentered quintic fourfold at a double point") {
  // F = z0^3 q2 + z0^2 q3 for random forms q2, q3 vanishes to order 2 at
  // (1,0,...,0); the recentered graded parts must start a regular sequence
  Rng rng(53);
  FpCtx ctx{kP};
  PolyFp q2 = random_form(5, 2, ctx, rng);
  PolyFp q3 = random_form(5, 3, ctx, rng);
  auto embed = [&](const PolyFp& q, uint16_t z0pow) {
    std::vector<PolyFp::Term> terms;
    for (auto& t : q.terms()) {
      std::vector<uint16_t> e(6, 0);
      e[0] = z0pow;
      for (size_t i = 0; i < 5; ++i) e[i + 1] = t.m.e[i];
      terms.push_back({Monomial(std::move(e)), t.c});
    }
    return make_poly<Fp>(6, std::move(terms));
  };
  PolyFp F = embed(q2, 3) + embed(q3, 2);
  std::vector<Fp> x(6, Fp(0, kP));
  x[0] = Fp(1, kP);
  auto rc = recenter(F, x);
  PolyFp p2 = rc.f.graded_part(2), p3 = rc.f.graded_part(3);
  CHECK(rc.f.graded_part(1).zero_poly());
  CHECK(p2 == q2);  // the chart at (1,0,..,0) reproduces the forms directly
  auto rep = is_regular_sequence<Fp>({p2, p3}, 5);
  CHECK(rep.regular);
}

TEST_CASE("regular sequences are stable under permutation on diagonal monomials") {
  // z1^2, z2^3, z3^2 in 4 variables: every permutation keeps all prefix
  // codimensions right
  auto mono = [](size_t i, uint16_t e) {
    Monomial m(4);
    m.e[i] = e;
    m.deg = e;
    return PolyQ::term(m, Rat(1));
  };
  std::vector<PolyQ> seq = {mono(0, 2), mono(1, 3), mono(2, 2)};
  std::vector<int> perm = {0, 1, 2};
  do {
    std::vector<PolyQ> arranged;
    for (int i : perm) arranged.push_back(seq[i]);
    CHECK(is_regular_sequence<Rat>(arranged, 4).regular);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("quotient dimension counts standard monomials") {
  PolyQ g1 = poly_parse_string("1 2 0\n-1 0 1\n");  // z1^2 - z2
  PolyQ g2 = poly_parse_string("1 0 2\n");          // z2^2
  auto gb = groebner_basis<Rat>(2, {g1, g2});
  auto cnt = quotient_dimension(gb);
  REQUIRE(cnt.has_value());
  CHECK(*cnt == 4);  // 1, z1, z2, z1 z2
}

TEST_CASE("local multiplicity at the origin ignores components elsewhere") {
  // (z1 z2, z1^3 + z2^3): six branches through 0 in the plane slice model
  PolyQ f = poly_parse_string("1 1 1\n", 2);
  PolyQ g = poly_parse_string("1 3 0\n1 0 3\n", 2);
  CHECK(local_multiplicity_at_origin<Rat>({f, g}, 2, Rat(1)) == 6);
  // shifted component away from the origin must not count
  PolyQ h = poly_parse_string("1 1 0\n-1 0 0\n", 2);  // z1 - 1
  PolyQ z2 = poly_parse_string("1 0 1\n", 2);
  PolyQ z1 = poly_parse_string("1 1 0\n", 2);
  PolyQ prod1 = z1 * h;  // z1(z1 - 1)
  CHECK(local_multiplicity_at_origin<Rat>({prod1, z2}, 2, Rat(1)) == 1);
}
