#include "fano/poly_io.hpp"

#include <sstream>
#include <stdexcept>

namespace fano {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

PolyQ poly_parse(std::istream& in, std::optional<size_t> nvars) {
  std::vector<PolyQ::Term> terms;
  std::string line;
  size_t n = nvars.value_or(0);
  bool n_known = nvars.has_value();
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(strip_comment(line));
    std::vector<std::string> tok;
    std::string w;
    while (ls >> w) tok.push_back(w);
    if (tok.empty()) continue;
    if (!n_known) {
      if (tok.size() < 2)
        throw std::runtime_error("line " + std::to_string(lineno) + ": term needs coeff and exponents");
      n = tok.size() - 1;
      n_known = true;
    }
    if (tok.size() != n + 1)
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected " +
                               std::to_string(n + 1) + " fields, got " + std::to_string(tok.size()));
    Rat c = rat_parse(tok[0]);
    std::vector<uint16_t> e(n);
    for (size_t i = 0; i < n; ++i) {
      long v = std::stol(tok[i + 1]);
      if (v < 0 || v > 0xffff)
        throw std::runtime_error("line " + std::to_string(lineno) + ": exponent out of range");
      e[i] = static_cast<uint16_t>(v);
    }
    terms.push_back({Monomial(std::move(e)), c});
  }
  if (!n_known) return PolyQ(nvars.value_or(0));
  return make_poly<Rat>(n, std::move(terms));
}

PolyQ poly_parse_string(const std::string& text, std::optional<size_t> nvars) {
  std::istringstream in(text);
  return poly_parse(in, nvars);
}

void poly_print(std::ostream& out, const PolyQ& p) {
  for (auto& t : p.terms()) {
    out << rat_str(t.c);
    for (size_t i = 0; i < p.nvars(); ++i) out << ' ' << t.m.e[i];
    out << '\n';
  }
}

std::string poly_to_text(const PolyQ& p) {
  std::ostringstream os;
  poly_print(os, p);
  return os.str();
}

template <class K>
std::string poly_pretty(const Poly<K>& p, const std::string& var) {
  if (p.zero_poly()) return "0";
  std::string s;
  for (auto& t : p.terms()) {
    std::string c;
    if constexpr (std::is_same_v<K, Rat>)
      c = rat_str(t.c);
    else
      c = to_string(t.c);
    if (!s.empty()) s += " + ";
    if (t.m.is_one())
      s += c;
    else if (c == "1")
      s += monomial_str(t.m, var);
    else
      s += c + "*" + monomial_str(t.m, var);
  }
  return s;
}

template std::string poly_pretty<Rat>(const Poly<Rat>&, const std::string&);
template std::string poly_pretty<Fp>(const Poly<Fp>&, const std::string&);

PolyFp poly_to_fp(const PolyQ& p, int64_t prime) {
  std::vector<PolyFp::Term> terms;
  terms.reserve(p.terms().size());
  for (auto& t : p.terms()) terms.push_back({t.m, fp_from_rat(t.c, prime)});
  return make_poly<Fp>(p.nvars(), std::move(terms));
}

PolyQ poly_lift(const PolyFp& p) {
  std::vector<PolyQ::Term> terms;
  terms.reserve(p.terms().size());
  for (auto& t : p.terms()) terms.push_back({t.m, Rat(static_cast<long>(t.c.value()))});
  return make_poly<Rat>(p.nvars(), std::move(terms));
}

}  // namespace fano
