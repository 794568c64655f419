#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fano/exclusion.hpp"
#include "fano/ratio_engine.hpp"
#include "fano/rng.hpp"

using namespace fano;

namespace {

// exhaustive grid over the slice simplex with step 1/steps, exact arithmetic
struct GridScan {
  Rat min_gap;
  bool found_violation = false;
  bool any = false;
};

GridScan grid_scan(const QuadraticRatioClaim& claim, long steps) {
  GridScan out;
  const size_t n = claim.region.n();
  QuadForm gap = claim.num - claim.den.scaled(claim.bound);
  std::vector<long> k(n, 0);
  auto rec = [&](auto&& self, size_t pos, long rem) -> void {
    if (pos + 1 == n) {
      k[pos] = rem;
      std::vector<Rat> x;
      for (auto v : k) {
        Rat c(v, steps);
        c.canonicalize();
        x.push_back(c);
      }
      if (!claim.region.contains(x)) return;
      Rat val = gap.eval(x);
      if (!out.any || val < out.min_gap) out.min_gap = val;
      out.any = true;
      if (sgn(val) < 0) out.found_violation = true;
      return;
    }
    for (long v = 0; v <= rem; ++v) {
      k[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, steps);
  return out;
}

QuadraticRatioClaim random_claim(Rng& rng) {
  QuadraticRatioClaim c;
  c.id = "random";
  size_t n = 2 + rng.below(2);  // 2 or 3 variables
  for (size_t i = 0; i < n; ++i) c.region.names.push_back("x" + std::to_string(i + 1));
  c.num = QuadForm(n);
  c.den = QuadForm(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      c.num.add_coeff(i, j, Rat(rng.int_in(-6, 6)));
      c.den.add_coeff(i, j, Rat(rng.int_in(0, 6)));
    }
    c.den.add_coeff(i, i, Rat(1));  // keep the denominator positive on the simplex
  }
  c.bound = rat(rng.int_in(-3, 3), 1 + rng.int_in(0, 1));
  c.bound.canonicalize();
  return c;
}

}  // namespace

TEST_CASE("the Prop-7 inequality holds with equality exactly on s = t") {
  auto cert = verify_ratio_bound(prop7_claim());
  CHECK(cert.verdict == ClaimVerdict::BoundHoldsWithEquality);
  CHECK(cert.satisfied);
  CHECK(cert.min_gap == Rat(0));
  REQUIRE(cert.equality_rays.size() == 1);
  CHECK(cert.equality_rays[0] == std::vector<long long>{1, 1});
  REQUIRE(cert.ratio_min.has_value());
  CHECK(*cert.ratio_min == Rat(3));
  REQUIRE(cert.ratio_min_rays.size() == 1);
  CHECK(cert.ratio_min_rays[0] == std::vector<long long>{1, 1});
  // the identity N - 3D = (s - t)^2
  REQUIRE(cert.sos.has_value());
  CHECK(cert.sos->valid);
  CHECK(cert.sos->kind == "psd-ldl");
  REQUIRE(cert.sos->squares.size() == 1);
  CHECK(cert.sos->squares[0].coeff == Rat(1));
  CHECK(cert.sos->squares[0].lin.c == std::vector<Rat>{Rat(1), Rat(-1)});
  CHECK(cert.revalidate());
}

TEST_CASE("the Prop-8 inequality fails with an explicit violating ray") {
  auto cert = verify_ratio_bound(prop8_claim(3));
  CHECK(cert.verdict == ClaimVerdict::BoundFails);
  CHECK(!cert.satisfied);
  REQUIRE(!cert.violating_ray.empty());
  CHECK(cert.revalidate());
  // the spec's witness (1, 1, 0): left side 13/3 against 32/3
  std::vector<Rat> x = {Rat(1), Rat(1), Rat(0)};
  Rat lhs = Rat(2) * rat(5, 3) * x[0] + x[1];
  Rat rhs = (Rat(2) * x[0] + Rat(2) * x[1] + x[2]) * (Rat(2) * x[0] + Rat(2) * x[1] + x[2]) /
            (x[0] / 2 + x[1] + x[2]);
  CHECK(lhs == rat(13, 3));
  CHECK(rhs == rat(32, 3));
  CHECK(cert.claim.num.eval(x) < cert.claim.den.eval(x));  // bound 1 violated at (1,1,0)
}

TEST_CASE("ratio minima of the section-2.4 and Lemma-3 denominators") {
  {
    auto cert = verify_ratio_bound(ratio_claim_T(rat(4, 3)));
    CHECK(cert.verdict == ClaimVerdict::BoundHoldsWithEquality);
    REQUIRE(cert.ratio_min.has_value());
    CHECK(*cert.ratio_min == rat(4, 3));
    REQUIRE(!cert.ratio_min_rays.empty());
    CHECK(cert.ratio_min_rays[0] == std::vector<long long>{0, 1, 0});
    REQUIRE(cert.sos.has_value());
    CHECK(cert.sos->kind == "nonneg-monomials");
    CHECK(cert.revalidate());
  }
  {
    auto cert = verify_ratio_bound(ratio_claim_W_mu4(rat(3, 2)));
    CHECK(cert.satisfied);
    REQUIRE(cert.ratio_min.has_value());
    CHECK(*cert.ratio_min == rat(3, 2));
    REQUIRE(!cert.ratio_min_rays.empty());
    CHECK(cert.ratio_min_rays[0] == std::vector<long long>{0, 1, 0});
  }
  {
    auto cert = verify_ratio_bound(ratio_claim_W_mu3(Rat(2)));
    CHECK(cert.satisfied);
    REQUIRE(cert.ratio_min.has_value());
    CHECK(*cert.ratio_min == Rat(2));
    // N - 2D = 2 p0^2 + 2 p0 Sl + Su^2 is a nonnegative monomial combination
    REQUIRE(cert.sos.has_value());
    CHECK(cert.sos->kind == "nonneg-monomials");
  }
}

TEST_CASE("verdicts agree with an exact grid scan on random claims") {
  Rng rng(97);
  int tested = 0, holds_count = 0, fails_count = 0;
  while (tested < 200) {
    auto claim = random_claim(rng);
    Certificate cert;
    try {
      cert = verify_ratio_bound(claim);
    } catch (const std::domain_error&) {
      continue;  // denominator not positive; not a valid ratio claim
    }
    if (cert.verdict == ClaimVerdict::VacuousEmptyRegion) continue;
    ++tested;
    auto grid = grid_scan(claim, 50);
    REQUIRE(grid.any);
    // the grid is a subset of the region, so its minimum dominates the true one
    CHECK(grid.min_gap >= cert.min_gap);
    if (cert.min_gap >= 0) {
      ++holds_count;
      CHECK(!grid.found_violation);
    } else {
      ++fails_count;
      // independent re-evaluation of the engine's witness
      std::vector<Rat> x;
      for (auto v : cert.violating_ray) x.emplace_back(static_cast<long>(v));
      CHECK(claim.num.eval(x) < claim.bound * claim.den.eval(x));
      // a violation this deep is visible on the grid as well
      if (cert.min_gap <= rat(-1, 10)) CHECK(grid.found_violation);
    }
    CHECK(cert.revalidate());
  }
  CHECK(holds_count > 20);
  CHECK(fails_count > 20);
}

TEST_CASE("verdicts and minimizer rays are scale invariant") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    auto claim = random_claim(rng);
    Certificate a;
    try {
      a = verify_ratio_bound(claim);
    } catch (const std::domain_error&) {
      continue;
    }
    QuadraticRatioClaim scaled = claim;
    Rat k(rng.int_in(1, 7), 1 + rng.int_in(0, 2));
    k.canonicalize();
    scaled.num = claim.num.scaled(k);
    scaled.den = claim.den.scaled(k);
    auto b = verify_ratio_bound(scaled);
    CHECK(a.verdict == b.verdict);
    if (a.verdict == ClaimVerdict::BoundFails) CHECK(a.violating_ray == b.violating_ray);
    if (a.ratio_min && b.ratio_min) CHECK(*a.ratio_min == *b.ratio_min);
  }
}

TEST_CASE("degenerate regions restrict to faces without perturbation") {
  // force Su = 0 through a constraint Su <= 0
  QuadraticRatioClaim claim = ratio_claim_T(rat(4, 3));
  LinForm g(3);
  g.c[2] = -1;  // -Su >= 0, so Su = 0 on the region
  claim.region.constraints.push_back(g);
  auto cert = verify_ratio_bound(claim);
  CHECK(cert.satisfied);
  REQUIRE(cert.ratio_min.has_value());
  CHECK(*cert.ratio_min == rat(4, 3));
  for (auto& ray : cert.ratio_min_rays) CHECK(ray[2] == 0);
}

TEST_CASE("negative denominators are rejected") {
  QuadraticRatioClaim claim;
  claim.id = "bad";
  claim.region.names = {"x", "y"};
  claim.num = QuadForm(2);
  claim.num.add_coeff(0, 0, Rat(1));
  claim.den = QuadForm(2);
  claim.den.add_coeff(0, 1, Rat(1));
  claim.den.add_coeff(0, 0, Rat(-1));
  CHECK_THROWS_WITH_AS(verify_ratio_bound(claim), "denominator not positive on cone",
                       std::domain_error);
}

TEST_CASE("strictness: an equality locus defeats a strict claim") {
  QuadraticRatioClaim strict = prop7_claim();
  strict.strict = true;
  auto cert = verify_ratio_bound(strict);
  CHECK(cert.verdict == ClaimVerdict::BoundHoldsWithEquality);
  CHECK(!cert.satisfied);  // equality on s = t defeats strictness
  QuadraticRatioClaim relaxed = prop7_claim(rat(5, 2));
  relaxed.strict = true;
  auto cert2 = verify_ratio_bound(relaxed);
  CHECK(cert2.verdict == ClaimVerdict::BoundHolds);
  CHECK(cert2.satisfied);
}

TEST_CASE("certificates survive the claim-file round trip") {
  auto claim = ratio_claim_T(rat(4, 3));
  std::ostringstream os;
  claim_write(os, claim);
  std::istringstream is(os.str());
  auto back = claim_read(is);
  CHECK(back.region.names == claim.region.names);
  CHECK(back.num == claim.num);
  CHECK(back.den == claim.den);
  CHECK(back.bound == claim.bound);
  CHECK(back.strict == claim.strict);
  auto cert = verify_ratio_bound(back);
  REQUIRE(cert.ratio_min.has_value());
  CHECK(*cert.ratio_min == rat(4, 3));
}

TEST_CASE("claim files parse the documented format") {
  std::string text =
      "# the section-2.4 ratio claim\n"
      "p0 Sl Su\n"
      "p0 <= Sl\n"
      "N:\n"
      "0 0 4\n0 1 8\n0 2 4\n1 1 4\n1 2 4\n2 2 1\n"
      "D:\n"
      "(0, 0, 1)\n(0, 1, 7/2)\n(0, 2, 2)\n(1, 1, 3)\n(1, 2, 3)\n"
      "bound: 4/3\n"
      "strict: no\n";
  std::istringstream is(text);
  auto claim = claim_read(is);
  CHECK(claim.region.names.size() == 3);
  CHECK(claim.region.constraints.size() == 1);
  auto cert = verify_ratio_bound(claim);
  REQUIRE(cert.ratio_min.has_value());
  CHECK(*cert.ratio_min == rat(4, 3));
  std::istringstream bad("p0 Sl\np0 < Sl\nbound: 1\n");
  CHECK_THROWS(claim_read(bad));
}
