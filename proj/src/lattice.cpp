#include "fano/lattice.hpp"

namespace fano {

DivisorClass tau_action(const DivisorClass& c) {
  if (c.mu != c.M - 2)
    throw std::invalid_argument("involution defined only at maximal multiplicity");
  long mu = c.mu;
  long M = c.M;
  // aH - bE maps to (a(M-1) - b mu) H - (aM - b(mu+1)) E
  return {c.a * (M - 1) - c.b * mu, c.a * M - c.b * (mu + 1), c.M, c.mu};
}

std::array<std::array<long, 2>, 2> tau_matrix(int M) {
  long mu = M - 2;
  return {{{M - 1, -mu}, {M, -(mu + 1)}}};
}

long degree_functional(const DivisorClass& c) { return c.a * c.M; }
long mult_functional(const DivisorClass& c) { return c.b * c.mu; }

UntwistResult untwist_check(long n, long nu0, int M) {
  if (nu0 <= n) throw std::invalid_argument("point not maximal; untwisting not needed");
  DivisorClass sys{n, nu0, M, M - 2};
  DivisorClass t = tau_action(sys);
  UntwistResult r;
  r.new_n = t.a;
  r.new_nu = t.b;
  r.coefficient_inequality = t.b <= t.a;
  r.maximal_removed = t.b <= t.a;
  return r;
}

}  // namespace fano
