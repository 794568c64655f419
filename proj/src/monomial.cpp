#include "fano/monomial.hpp"

namespace fano {

std::string monomial_str(const Monomial& m, const std::string& var) {
  if (m.is_one()) return "1";
  std::string s;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var + std::to_string(i + 1);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

}  // namespace fano
