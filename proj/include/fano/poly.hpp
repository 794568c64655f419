#pragma once

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "fano/fp.hpp"
#include "fano/monomial.hpp"
#include "fano/rational.hpp"

namespace fano {

// Sparse multivariate polynomial over an exact coefficient field K (Fp or
// Rat). Terms are kept sorted grevlex-descending with no zero coefficients,
// so the leading term is terms().front(). Values are immutable in spirit:
// every operation builds a fresh polynomial.
template <class K>
class Poly {
  static_assert(!std::is_floating_point_v<K>, "exact coefficient fields only");

 public:
  struct Term {
    Monomial m;
    K c;
  };

  Poly() = default;
  explicit Poly(size_t nvars) : nvars_(nvars) {}

  static Poly zero(size_t nvars) { return Poly(nvars); }

  static Poly term(const Monomial& m, const K& c) {
    Poly p(m.nvars());
    if (!is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  static Poly constant(size_t nvars, const K& c) { return term(Monomial(nvars), c); }

  size_t nvars() const { return nvars_; }
  bool zero_poly() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& lead() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }

  uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().m.deg; }

  // total degree over all terms equals lead degree for grevlex, kept for clarity
  uint32_t total_degree() const {
    uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
  }

  K coeff(const Monomial& m) const {
    for (auto& t : terms_)
      if (t.m == m) return t.c;
    return K();
  }

  K constant_term() const { return terms_.empty() ? K() : coeff(Monomial(nvars_)); }

  bool homogeneous() const {
    for (auto& t : terms_)
      if (t.m.deg != terms_.front().m.deg) return false;
    return true;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = grevlex_cmp(a.terms_[i].m, b.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        K s = a.terms_[i].c + b.terms_[j].c;
        if (!is_zero(s)) r.terms_.push_back({a.terms_[i].m, s});
        ++i, ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m, -t.c});
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r(a.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (auto& ta : a.terms_)
      for (auto& tb : b.terms_) prod.push_back({ta.m * tb.m, ta.c * tb.c});
    std::sort(prod.begin(), prod.end(),
              [](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m) > 0; });
    for (auto& t : prod) {
      if (!r.terms_.empty() && r.terms_.back().m == t.m) {
        r.terms_.back().c += t.c;
        if (is_zero(r.terms_.back().c)) r.terms_.pop_back();
      } else if (!is_zero(t.c)) {
        r.terms_.push_back(t);
      }
    }
    return r;
  }

  Poly scaled(const K& c) const {
    Poly r(nvars_);
    if (is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
  }

  // this - (c * m) * g, the reduction step of polynomial division
  Poly reduce_step(const K& c, const Monomial& m, const Poly& g) const {
    return *this + g.scaled(-c).mul_monomial(m);
  }

  Poly mul_monomial(const Monomial& m) const {
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.m * m, t.c});
    return r;
  }

  Poly monic() const {
    if (terms_.empty()) return *this;
    return scaled(inv(terms_.front().c));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  template <class Pt>
  K eval(const Pt& x) const {
    K acc{};
    for (auto& t : terms_) {
      K v = t.c;
      for (size_t i = 0; i < nvars_; ++i)
        for (uint16_t k = 0; k < t.m.e[i]; ++k) v = v * x[i];
      acc += v;
    }
    return acc;
  }

  // sum of the terms of total degree exactly d
  Poly graded_part(uint32_t d) const {
    Poly r(nvars_);
    for (auto& t : terms_)
      if (t.m.deg == d) r.terms_.push_back(t);
    return r;
  }

  Poly derivative(size_t var) const {
    Poly r(nvars_);
    for (auto& t : terms_) {
      if (t.m.e[var] == 0) continue;
      Term d;
      d.m = t.m;
      d.m.e[var] -= 1;
      d.m.deg -= 1;
      d.c = t.c * int_to_coeff(t.m.e[var], t.c);
      if (!is_zero(d.c)) r.terms_.push_back(d);
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m) > 0; });
    return r;
  }

  // used by inserters that know the order; validates nothing
  void push_sorted(const Monomial& m, const K& c) {
    if (!is_zero(c)) terms_.push_back({m, c});
  }

 private:
  static void check_same(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable counts differ");
  }

  static K int_to_coeff(long n, const K& proto);

  size_t nvars_ = 0;
  std::vector<Term> terms_;
};

template <>
inline Rat Poly<Rat>::int_to_coeff(long n, const Rat&) {
  return Rat(n);
}

template <>
inline Fp Poly<Fp>::int_to_coeff(long n, const Fp& proto) {
  return Fp(n, proto.modulus());
}

// Build a polynomial from unordered (monomial, coeff) pairs, merging
// duplicate monomials.
template <class K>
Poly<K> make_poly(size_t nvars, std::vector<typename Poly<K>::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return grevlex_cmp(x.m, y.m) > 0; });
  Poly<K> r(nvars);
  std::vector<typename Poly<K>::Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().m == t.m) {
      merged.back().c += t.c;
    } else {
      merged.push_back(t);
    }
  }
  for (auto& t : merged)
    if (!is_zero(t.c)) r.push_sorted(t.m, t.c);
  return r;
}

using PolyQ = Poly<Rat>;
using PolyFp = Poly<Fp>;

}  // namespace fano
