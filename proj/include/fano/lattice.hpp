#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace fano {

// Integer divisor class a H - b E on the blow-up V0 of the singular point;
// Pic V0 = Z H + Z E. M is the ambient degree, mu the multiplicity of the
// point.
struct DivisorClass {
  long a = 0;  // H coefficient
  long b = 0;  // E coefficient
  int M = 0;
  int mu = 0;

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    check_context(x, y);
    return {x.a + y.a, x.b + y.b, x.M, x.mu};
  }
  friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    check_context(x, y);
    return {x.a - y.a, x.b - y.b, x.M, x.mu};
  }
  DivisorClass scaled(long k) const { return {k * a, k * b, M, mu}; }

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.a == y.a && x.b == y.b && x.M == y.M && x.mu == y.mu;
  }

 private:
  static void check_context(const DivisorClass& x, const DivisorClass& y) {
    if (x.M != y.M || x.mu != y.mu) throw std::invalid_argument("divisor classes on different blow-ups");
  }
};

inline DivisorClass hyperplane_class(int M, int mu) { return {1, 0, M, mu}; }
// E itself is 0*H - (-1)*E in the aH - bE bookkeeping
inline DivisorClass exceptional_class(int M, int mu) { return {0, -1, M, mu}; }

// the class of the tangent divisor T = T_x V cap V, namely (M-2)H - (M-1)E
inline DivisorClass tangent_divisor_class(int M, int mu) { return {M - 2, M - 1, M, mu}; }

// Galois involution on Pic V0, defined only at maximal multiplicity mu = M-2:
// tau* H = (M-1)H - ME and tau* E = mu H - (mu+1)E.
DivisorClass tau_action(const DivisorClass& c);

// the 2x2 matrix of tau* in the (H, -E) bookkeeping, rows act on (a, b)
std::array<std::array<long, 2>, 2> tau_matrix(int M);

// degree(aH - bE) = aM and mult(aH - bE) = b mu; these reproduce the
// displayed computation that bounds nu0/n by M/(M-1)
long degree_functional(const DivisorClass& c);
long mult_functional(const DivisorClass& c);

struct UntwistResult {
  long new_n = 0;
  long new_nu = 0;
  bool maximal_removed = false;
  bool coefficient_inequality = false;  // nM - nu0(mu+1) <= n(M-1) - nu0 mu
};

// Apply tau to the moving system nH - nu0 E of a maximal point (nu0 > n,
// mu = M-2) and report whether the transformed system is no longer maximal.
UntwistResult untwist_check(long n, long nu0, int M);

}  // namespace fano
