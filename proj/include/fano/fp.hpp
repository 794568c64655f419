#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fano/rational.hpp"

namespace fano {

// Element of the prime field F_p for an odd prime p < 2^31. Values are kept
// canonical in [0, p). An element constructed as Fp() is a detached zero that
// combines with any modulus, so containers and accumulators work naturally.
class Fp {
 public:
  Fp() = default;
  Fp(int64_t value, int64_t p) : p_(p) {
    check_modulus(p);
    v_ = value % p;
    if (v_ < 0) v_ += p;
  }

  int64_t value() const { return v_; }
  int64_t modulus() const { return p_; }

  bool zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    int64_t p = joint(a, b);
    if (p == 0) return Fp();
    int64_t s = a.v_ + b.v_;
    if (s >= p) s -= p;
    return raw(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    int64_t p = joint(a, b);
    if (p == 0) return Fp();
    int64_t s = a.v_ - b.v_;
    if (s < 0) s += p;
    return raw(s, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    int64_t p = joint(a, b);
    if (p == 0) return Fp();
    return raw((a.v_ * b.v_) % p, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * inv(b); }
  Fp operator-() const {
    if (p_ == 0) return Fp();
    return raw(v_ == 0 ? 0 : p_ - v_, p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.v_ == 0 && b.v_ == 0) return true;
    return joint(a, b) != 0 && a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend Fp inv(const Fp& a) {
    if (a.v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid
    int64_t t = 0, new_t = 1, r = a.p_, new_r = a.v_;
    while (new_r != 0) {
      int64_t q = r / new_r;
      int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += a.p_;
    return raw(t, a.p_);
  }

  static void check_modulus(int64_t p);

 private:
  static Fp raw(int64_t v, int64_t p) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  static int64_t joint(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw std::domain_error("mixed prime-field moduli");
    return a.p_;
  }

  int64_t v_ = 0;
  int64_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.zero(); }

// Reduce an exact rational into F_p. Fails if the denominator is divisible
// by p.
Fp fp_from_rat(const Rat& r, int64_t p);

std::string to_string(const Fp& x);

}  // namespace fano
