#include "fano/rational.hpp"

#include <stdexcept>

namespace fano {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    // decimal literal: shift the point away and divide by the power of ten
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad rational literal: " + s);
    Rat r(Int(digits), Int(1));
    Int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    r /= Rat(den);
    r.canonicalize();
    return r;
  }
  Rat r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace fano
