#pragma once

#include "fano/groebner.hpp"
#include "fano/poly.hpp"
#include "fano/rng.hpp"

namespace fano {

struct FpCtx {
  int64_t p;
};
struct RatCtx {
  long height = 10;  // coefficients drawn from [-height, height]
};

inline Fp random_scalar(const FpCtx& ctx, Rng& rng) {
  return Fp(static_cast<int64_t>(rng.below(static_cast<uint64_t>(ctx.p))), ctx.p);
}
inline Rat random_scalar(const RatCtx& ctx, Rng& rng) {
  return Rat(rng.int_in(-ctx.height, ctx.height));
}

inline Fp random_nonzero(const FpCtx& ctx, Rng& rng) {
  return Fp(1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(ctx.p - 1))), ctx.p);
}
inline Rat random_nonzero(const RatCtx& ctx, Rng& rng) {
  long v = rng.int_in(1, ctx.height);
  return Rat(rng.below(2) ? v : -v);
}

template <class Ctx>
auto random_form(size_t nvars, uint32_t deg, const Ctx& ctx, Rng& rng) {
  using K = decltype(random_scalar(ctx, rng));
  std::vector<typename Poly<K>::Term> terms;
  for (auto& m : monomials_of_degree(nvars, deg)) {
    K c = random_scalar(ctx, rng);
    if (!is_zero(c)) terms.push_back({m, c});
  }
  return make_poly<K>(nvars, std::move(terms));
}

template <class Ctx>
auto random_point(size_t nvars, const Ctx& ctx, Rng& rng) {
  using K = decltype(random_scalar(ctx, rng));
  std::vector<K> x(nvars);
  for (auto& v : x) v = random_scalar(ctx, rng);
  return x;
}

}  // namespace fano
