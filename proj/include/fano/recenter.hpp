#pragma once

#include <stdexcept>
#include <vector>

#include "fano/poly.hpp"

namespace fano {

inline Rat scalar_from_long(long v, const Rat&) { return Rat(v); }
inline Fp scalar_from_long(long v, const Fp& proto) { return Fp(v, proto.modulus()); }

// Local equation of a projective hypersurface at a point: the chart sets the
// first nonzero coordinate of x to 1 and the remaining coordinates become
// affine offsets u_i from x. The result satisfies f(0) = 0 and its graded
// parts are the q_d of the expansion at x.
template <class K>
struct Recentered {
  Poly<K> f;     // in nvars(F) - 1 affine variables
  size_t chart;  // index of the projective coordinate set to 1
};

template <class K>
Recentered<K> recenter(const Poly<K>& F, std::vector<K> x) {
  const size_t np = F.nvars();  // projective coordinate count
  if (np < 2) throw std::invalid_argument("need at least two homogeneous coordinates");
  if (x.size() != np) throw std::invalid_argument("point has wrong coordinate count");
  if (F.zero_poly()) throw std::invalid_argument("zero form");
  if (!F.homogeneous()) throw std::invalid_argument("form is not homogeneous");

  size_t chart = np;
  for (size_t i = 0; i < np; ++i) {
    if (!is_zero(x[i])) {
      chart = i;
      break;
    }
  }
  if (chart == np) throw std::invalid_argument("point has no nonzero coordinate");
  K scale = inv(x[chart]);
  for (auto& xi : x) xi = xi * scale;

  if (!is_zero(F.eval(x))) throw std::invalid_argument("point not on hypersurface");

  const size_t na = np - 1;  // affine variables, projective index skipping `chart`
  const K proto = F.lead().c;

  // binomial expansion (x_i + u_i)^e as a univariate polynomial in u slot `slot`
  auto binom_pow = [&](size_t slot, const K& xi, uint16_t e) {
    std::vector<typename Poly<K>::Term> terms;
    // C(e, k) x_i^{e-k} u^k
    long binom = 1;
    std::vector<K> xpow(e + 1, scalar_from_long(1, proto));
    for (uint16_t k = 1; k <= e; ++k) xpow[k] = xpow[k - 1] * xi;
    for (uint16_t k = 0; k <= e; ++k) {
      if (k > 0) binom = binom * (e - k + 1) / k;
      K c = scalar_from_long(binom, proto) * xpow[e - k];
      if (is_zero(c)) continue;
      Monomial m(na);
      m.e[slot] = k;
      m.deg = k;
      terms.push_back({m, c});
    }
    return make_poly<K>(na, std::move(terms));
  };

  Poly<K> acc(na);
  for (auto& t : F.terms()) {
    Poly<K> piece = Poly<K>::constant(na, t.c);
    for (size_t i = 0; i < np; ++i) {
      if (i == chart || t.m.e[i] == 0) continue;
      size_t slot = i < chart ? i : i - 1;
      piece = piece * binom_pow(slot, x[i], t.m.e[i]);
    }
    acc = acc + piece;
  }
  return {acc, chart};
}

}  // namespace fano
