#include "fano/fp.hpp"

namespace fano {

namespace {

bool is_prime_i64(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

void Fp::check_modulus(int64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (int64_t(1) << 31) || !is_prime_i64(p))
    throw std::domain_error("modulus must be an odd prime below 2^31, got " + std::to_string(p));
}

Fp fp_from_rat(const Rat& r, int64_t p) {
  Int num = r.get_num(), den = r.get_den();
  Int pm(static_cast<long>(p));
  Int nm = num % pm, dm = den % pm;
  if (dm == 0) throw std::domain_error("denominator divisible by field characteristic");
  Fp n(nm.get_si(), p), d(dm.get_si(), p);
  return n / d;
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }

}  // namespace fano
