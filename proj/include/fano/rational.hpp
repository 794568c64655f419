#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fano {

// Exact arbitrary-precision rational. All arithmetic in the toolkit that is
// not prime-field arithmetic goes through this type; no floating point is
// ever stored in a certificate.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);

// Accepts "a", "a/b" and decimal strings like "3.01" (read exactly).
Rat rat_parse(const std::string& s);

std::string rat_str(const Rat& r);

inline double rat_double(const Rat& r) { return r.get_d(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat inv(const Rat& r) { return Rat(1) / r; }

}  // namespace fano
