#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano/qform.hpp"

namespace fano {

// exact minimum of a quadratic form over the slice polytope
// { x >= 0, region constraints >= 0, sum x = 1 }
struct SliceMinimum {
  bool empty_region = false;
  Rat value;
  std::vector<Rat> argmin;
  // all distinct candidate points attaining the minimum (face-critical points
  // and vertices)
  std::vector<std::vector<Rat>> attained_at;
  // every vertex of the polytope, kept for ratio seeding
  std::vector<std::vector<Rat>> vertices;
};

SliceMinimum minimize_on_slice(const QuadForm& q, const ConeRegion& region);

// sum-of-squares style identity for a quadratic form
struct SosSquare {
  Rat coeff;    // > 0
  LinForm lin;  // coeff * lin^2
};
struct SosProduct {
  Rat coeff;  // >= 0
  size_t i, j;  // coeff * x_i x_j, products of the nonnegativity constraints
};
struct SosIdentity {
  std::vector<SosSquare> squares;
  std::vector<SosProduct> products;
  std::string kind;  // "psd-ldl", "nonneg-monomials" or "" when absent
  bool valid = false;

  QuadForm reconstruct(size_t n) const;
};

// try the two exact certificate shapes: nonnegative monomial combination,
// then an LDL^T split of a PSD Gram matrix
std::optional<SosIdentity> find_sos(const QuadForm& q);

enum class ClaimVerdict { BoundHolds, BoundHoldsWithEquality, BoundFails, VacuousEmptyRegion };

const char* verdict_name(ClaimVerdict v);

struct Certificate {
  QuadraticRatioClaim claim;
  ClaimVerdict verdict = ClaimVerdict::BoundFails;
  bool satisfied = false;  // claim holds with its own strictness flag applied

  Rat min_gap;                                    // min of N - cD on the slice
  std::vector<Rat> min_point;                     // slice point attaining it
  std::vector<long long> violating_ray;           // present when the bound fails
  std::vector<std::vector<long long>> equality_rays;

  std::optional<Rat> ratio_min;                   // certified min of N/D where D > 0
  std::vector<std::vector<long long>> ratio_min_rays;

  std::optional<SosIdentity> sos;                 // exact identity for N - cD
  std::vector<std::vector<long long>> den_zero_rays;  // rays of the slice with D = 0
  std::string notes;

  // re-evaluate every reported value from the claim data; certificates must
  // reproduce themselves exactly
  bool revalidate() const;
};

// Exact decision of min N/D >= c (or > c) over the cone minus the origin.
// Throws std::domain_error when D is negative somewhere on the region.
Certificate verify_ratio_bound(const QuadraticRatioClaim& claim);

// exact minimum of N/D over the slice where D > 0, when it is rational and
// certifiable; used by verify_ratio_bound and exposed for the case pipelines
std::optional<Rat> exact_ratio_min(const QuadraticRatioClaim& claim,
                                   std::vector<std::vector<long long>>* rays = nullptr);

}  // namespace fano
