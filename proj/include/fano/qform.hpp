#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

// homogeneous linear form c . x
struct LinForm {
  std::vector<Rat> c;

  LinForm() = default;
  explicit LinForm(size_t n) : c(n, Rat(0)) {}
  explicit LinForm(std::vector<Rat> coeffs) : c(std::move(coeffs)) {}

  size_t n() const { return c.size(); }
  Rat eval(const std::vector<Rat>& x) const;
  bool zero() const;
  std::string pretty(const std::vector<std::string>& names) const;
};

// homogeneous quadratic form x^T A x with A symmetric rational
struct QuadForm {
  std::vector<std::vector<Rat>> a;

  QuadForm() = default;
  explicit QuadForm(size_t n) : a(n, std::vector<Rat>(n, Rat(0))) {}

  size_t n() const { return a.size(); }
  Rat eval(const std::vector<Rat>& x) const;

  void add_coeff(size_t i, size_t j, const Rat& c);  // adds c * x_i x_j

  friend QuadForm operator+(const QuadForm& p, const QuadForm& q);
  friend QuadForm operator-(const QuadForm& p, const QuadForm& q);
  QuadForm scaled(const Rat& k) const;

  static QuadForm square(const LinForm& l);                       // l^2
  static QuadForm product(const LinForm& l, const LinForm& m);    // symmetrized l*m

  friend bool operator==(const QuadForm& p, const QuadForm& q);
  std::string pretty(const std::vector<std::string>& names) const;
};

// Polyhedral cone { x >= 0 componentwise, and g(x) >= 0 for the listed
// forms }. All constraints homogeneous, so the cone is decided on the slice
// sum x = 1.
struct ConeRegion {
  std::vector<std::string> names;
  std::vector<LinForm> constraints;

  size_t n() const { return names.size(); }
  bool contains(const std::vector<Rat>& x) const;
};

// Bound claim N(x) >= c * D(x) over a cone region, optionally strict away
// from the origin.
struct QuadraticRatioClaim {
  std::string id;
  ConeRegion region;
  QuadForm num;
  QuadForm den;
  Rat bound;
  bool strict = false;
};

// claim text format: variables line, constraints, N:/D: coefficient triples,
// bound and strictness
QuadraticRatioClaim claim_read(std::istream& in);
void claim_write(std::ostream& out, const QuadraticRatioClaim& c);

// exact linear algebra over Q ------------------------------------------------

// Solve A x = b. Returns nullopt when inconsistent; otherwise a particular
// solution and a basis of the kernel.
struct AffineSolution {
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> kernel;  // basis vectors
};
std::optional<AffineSolution> solve_affine(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

// Unique solution of a square system, nullopt if the matrix is singular.
std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

// scale a rational slice point to the primitive integer ray through it
std::vector<long long> integer_ray(const std::vector<Rat>& x);

}  // namespace fano
