// Budgeted search for destabilizing moves and the iterated semistabilization
// loop producing standard models with certificates.
#pragma once

#include "dpstab/hmk.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpstab {

struct SearchBudget {
  int w_max = 4;        // per-coordinate rho-weight bound
  int hill_rounds = 6;  // slice-cancellation rounds per candidate
  int t_degree_cap = 4; // t-degree of substitution coefficients
  int max_steps = 1000; // semistabilization loop bound
};

struct Move {
  std::optional<GradedSubstitution> sigma;
  OneParamSubgroup rho;
  std::string note;
};

enum class CertStatus { SemistableWithinBudget, BudgetExhausted };

struct StepLog {
  std::optional<std::string> substitution;
  std::vector<int> rho;
  HMKValue mu;
  std::string note;
  std::uint64_t hash_before = 0, hash_after = 0;
  bool obstructed_reduction = false;
};

struct Certificate {
  CertStatus status = CertStatus::SemistableWithinBudget;
  std::vector<StepLog> steps;
  HMKValue cumulative_mu;
  SearchBudget budget;
  std::vector<std::string> warnings;
};

// Nonzero integer vectors in [0, w_max]^n with gcd 1, reduced modulo the
// irrelevant subgroup (no candidate dominates (c_1,...,c_n) componentwise).
// Deterministic lexicographic order.
std::vector<OneParamSubgroup> enumerate_ops(const WeightSystem& ws, int w_max);

// Coordinate-change search that raises mult_rho of the family equation
// (after reduce_ci for complete intersections): exact linear systems cancel
// the current rho-leading slice; for CI spaces a factor-split move on a
// degree-deg_H coordinate is also attempted. Returns identity when no
// improvement exists within the budget.
GradedSubstitution kempf_hill_climb(const AnyFamily& fam, const OneParamSubgroup& rho,
                                    const SearchBudget& budget);

enum class DetectStatus { Found, None, Unknown };

struct FactorDetectResult {
  DetectStatus status = DetectStatus::None;
  std::optional<WPoly> factor;
};

// Looks for a factor of a t-free form that is a single variable or linear in
// the weight-1 variables (at most 3 of them). Exact division certifies hits;
// irrational-only candidates report Unknown.
FactorDetectResult linear_factor_detect(const WPoly& form, const WeightSystem& ws);

// Splits a t-free form of degree 2k into two degree-k factors when the exact
// quadratic-formula / gcd machinery applies (k = weight of the doubled
// CI coordinate). Rational coefficients only.
std::optional<std::pair<WPoly, WPoly>> split_half_degree(const WPoly& s, const WeightSystem& ws,
                                                         int k);

std::optional<std::pair<Move, HMKValue>> find_destabilizer(const AnyFamily& fam,
                                                           const LineBundleSpec& spec,
                                                           const SearchBudget& budget);

AnyFamily apply_move(const AnyFamily& fam, const Move& mv, bool* obstructed = nullptr);

std::pair<AnyFamily, Certificate> standardize(const AnyFamily& fam, const LineBundleSpec& spec,
                                              const SearchBudget& budget,
                                              const std::vector<std::string>* names = nullptr);

std::uint64_t family_hash(const AnyFamily& fam);

// Central-fiber integrality probe: a coordinate divisor or detected linear
// factor of the central fiber (modulo H for CI). nullopt when none is found.
std::optional<std::string> integrality_witness(const AnyFamily& fam,
                                               const std::vector<std::string>& names);

}  // namespace dpstab
