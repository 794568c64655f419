#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

// Exponent vector of a monomial in a fixed number of variables, with the
// total degree cached. Comparison is graded reverse lexicographic throughout
// the toolkit.
struct Monomial {
  std::vector<uint16_t> e;
  uint32_t deg = 0;

  Monomial() = default;
  explicit Monomial(size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<uint16_t> exps)
      : e(std::move(exps)), deg(std::accumulate(e.begin(), e.end(), 0u)) {}

  size_t nvars() const { return e.size(); }
  bool is_one() const { return deg == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
    r.deg = a.deg + b.deg;
    return r;
  }

  // a / b, caller guarantees divisibility
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
    r.deg = a.deg - b.deg;
    return r;
  }

  friend bool divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e.resize(a.e.size());
    uint32_t d = 0;
    for (size_t i = 0; i < a.e.size(); ++i) {
      r.e[i] = std::max(a.e[i], b.e[i]);
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.e == b.e;
  }
};

// grevlex: higher total degree wins; on ties the last nonzero entry of a-b
// decides, negative meaning a is larger.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; }

std::string monomial_str(const Monomial& m, const std::string& var = "z");

}  // namespace fano
