// Combinatorics of the linearized Picard group: monomial enumeration,
// partial-Fermat counts and characters, divisor expression in the
// tautological basis, the effectivity cone, and a small-instance
// discriminant-valuation oracle.
#pragma once

#include "dpstab/hmk.hpp"

#include <string>
#include <vector>

namespace dpstab {
namespace pic {

struct MonomialSet {
  WeightSystem ws;
  long r;
  std::vector<Monomial> monomials;  // complete, duplicate-free, grevlex-descending

  long size() const { return static_cast<long>(monomials.size()); }
  // per-variable exponent sums (so w_rho(set) = sum_i exp_sum[i]*w_i)
  std::vector<long> exponent_sums() const;
};

MonomialSet monomials(const WeightSystem& ws, long r);

// D = sum(d - 2 c_i) + 1
long socle_degree(const WeightSystem& ws, int d);

struct FermatData {
  WeightSystem ws;
  int d;
  long D;
  std::vector<long> M;  // M_ell per variable, ell = 1..n (1-indexed in reports)
};

// Counts of degree-D monomials divisible by x_ell^(d/c_ell - 1) and by no
// other x_j^(d/c_j - 1). Requires c_i | d for all i.
FermatData fermat_counts(const WeightSystem& ws, int d);

// Product formula for the weight-1 count, valid when c_n = 1.
long fermat_count_product_formula(const WeightSystem& ws, int d);

struct DeltaCoeffs {
  GenericCoeffs delta0;
  std::vector<GenericCoeffs> delta;  // delta[l-1] for l = 1..s
};

DeltaCoeffs hmk_delta_coeffs(const WeightSystem& ws, int d);

// HMK index of the tautological bundle Lambda_m; requires m*C >= d where C is
// the product of the distinct weights > 1.
Rational mu_tautological(const HypersurfaceFamily& fam, const OneParamSubgroup& rho, int m);

struct CharacterTable {
  SpaceId space;
  std::vector<std::string> bundles;            // row labels: basis bundles then deltas
  std::vector<std::string> columns;            // fixed point / subgroup pairs
  std::vector<std::vector<long>> chi;          // chi[row][col]
  std::vector<MuFunctional> basis_functionals; // for the basis rows only
  int basis_count = 0;
};

// Character table of the CI spaces (Dp1CI, Dp2CI), computed from first
// principles: T rows by weight sums over graded slices, Lambda rows by the
// ideal-sheaf determinant formulas, delta rows by the partial-Fermat counts.
CharacterTable character_table(SpaceId space);

// Exact coefficients of `target` (e.g. "delta1") over the tautological basis.
std::vector<Rational> express_divisor(SpaceId space, const std::string& target);

struct EffectivityCone {
  WeightSystem ws;
  int d;
  // rows act on the coefficient vector (a0, a_1..a_s, a_{s+1})
  std::vector<Rational> equality;                  // = 0
  std::vector<std::vector<Rational>> inequalities;  // >= 0
  bool contains(const GenericCoeffs& gc) const;
  GenericCoeffs balanced() const;
};

EffectivityCone effectivity_cone(const WeightSystem& ws, int d);

// val_t of the discriminant (resultant of the partials), at oracle sizes:
// equal weights, n = 2 (Sylvester) or n = 3 (Macaulay quotient), d <= 4.
// Throws std::domain_error when the discriminant vanishes identically.
long discriminant_valuation_oracle(const HypersurfaceFamily& fam);

}  // namespace pic
}  // namespace dpstab
