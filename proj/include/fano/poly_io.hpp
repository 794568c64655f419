#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fano/poly.hpp"

namespace fano {

// Text format shared by all tools: one term per line,
//
//   coeff  e1 e2 ... eN
//
// with '#' starting a comment and coefficients written as integers or a/b
// rationals. The variable count is inferred from the first term line unless
// fixed by the caller.

PolyQ poly_parse(std::istream& in, std::optional<size_t> nvars = std::nullopt);
PolyQ poly_parse_string(const std::string& text, std::optional<size_t> nvars = std::nullopt);

void poly_print(std::ostream& out, const PolyQ& p);
std::string poly_to_text(const PolyQ& p);

// human-readable rendering, e.g. "2*z1^2*z3 - 1/2*z2"
template <class K>
std::string poly_pretty(const Poly<K>& p, const std::string& var = "z");

PolyFp poly_to_fp(const PolyQ& p, int64_t prime);
PolyQ poly_lift(const PolyFp& p);

}  // namespace fano
