#include "fano/groebner.hpp"

namespace fano {

std::vector<Monomial> monomials_of_degree(size_t nvars, uint32_t d) {
  std::vector<Monomial> out;
  std::vector<uint16_t> e(nvars, 0);
  // lexicographic walk over compositions of d into nvars parts
  auto rec = [&](auto&& self, size_t pos, uint32_t rem) -> void {
    if (pos + 1 == nvars) {
      e[pos] = static_cast<uint16_t>(rem);
      out.push_back(Monomial(e));
      return;
    }
    for (uint32_t k = 0; k <= rem; ++k) {
      e[pos] = static_cast<uint16_t>(k);
      self(self, pos + 1, rem - k);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, d);
  return out;
}

}  // namespace fano
