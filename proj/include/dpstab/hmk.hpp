// Multiplicities, model transforms and Hilbert-Mumford style indices of
// one-parameter families with respect to diagonal subgroups and stability
// line bundles.
#pragma once

#include "dpstab/subst.hpp"
#include "dpstab/wpoly.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dpstab {

struct OneParamSubgroup {
  std::vector<int> w;

  OneParamSubgroup() = default;
  explicit OneParamSubgroup(std::vector<int> weights) : w(std::move(weights)) {}
  int n() const { return static_cast<int>(w.size()); }
  bool is_zero() const {
    for (int x : w)
      if (x) return false;
    return true;
  }
  friend bool operator==(const OneParamSubgroup& a, const OneParamSubgroup& b) {
    return a.w == b.w;
  }
};

inline OneParamSubgroup rho_irrelevant(const WeightSystem& ws) {
  return OneParamSubgroup(ws.weights());
}

// max { N : rho.F in (t^N) } = min over terms of val_t(coeff) + <rho, exponents>
long mult(const WPoly& f, const OneParamSubgroup& rho);

// rho(t).F, i.e. each term gains t^{<rho, exponents>}
WPoly rho_act(const WPoly& f, const OneParamSubgroup& rho);

// The coefficient of t^{mult} in rho(t).F: a t-free polynomial.
WPoly leading_form(const WPoly& f, const OneParamSubgroup& rho);

// ---------------------------------------------------------------------------
// Families

struct HypersurfaceFamily {
  WeightSystem ws;
  int degree;
  WPoly F;
  HypersurfaceFamily(const WeightSystem& ws_, int degree_, WPoly f);
};

struct CIFamily {
  WeightSystem ws;
  int deg_F, deg_H;
  WPoly F, H;
  CIFamily(const WeightSystem& ws_, int dF, int dH, WPoly f, WPoly h);
};

using AnyFamily = std::variant<HypersurfaceFamily, CIFamily>;

const WeightSystem& family_weights(const AnyFamily& fam);
const WPoly& family_F(const AnyFamily& fam);

// Is f a multiple of g within the graded slice deg(f) = deg(g) + shift?
// Returns the quotient form when it is. Decided by an exact linear solve.
std::optional<WPoly> graded_multiple(const WPoly& f, const WPoly& g, const WeightSystem& ws,
                                     long deg_f, long deg_g);

HypersurfaceFamily transform_hyp(const HypersurfaceFamily& fam, const OneParamSubgroup& rho);

struct ReduceResult {
  CIFamily fam;
  bool obstructed;  // a required lift had a negative t-exponent
  int steps;
};

// Replaces F within F + (forms)*H so that mult_rho(F) is maximal: afterwards the
// rho-leading form of F is not a multiple of the rho-leading form of H.
ReduceResult reduce_ci(const CIFamily& fam, const OneParamSubgroup& rho);

// reduce_ci followed by the model move (divide both equations by their t-power).
CIFamily transform_ci(const CIFamily& fam, const OneParamSubgroup& rho, bool* obstructed = nullptr);

// ---------------------------------------------------------------------------
// Stability line bundles

enum class SpaceId { Quartic2111, Sextic3211, Dp2CI, Dp1CI };

std::optional<SpaceId> identify_space(const WeightSystem& ws, int deg_f,
                                      std::optional<int> deg_h);
WeightSystem space_weights(SpaceId id);
bool space_is_ci(SpaceId id);

// mu = aF*mult(F) + aH*mult(H) - sum_i wc[i]*w_i
struct MuFunctional {
  Rational aF{0}, aH{0};
  std::vector<Rational> wc;

  Rational eval(long mF, long mH, const OneParamSubgroup& rho) const;
  MuFunctional& operator+=(const MuFunctional& o);
  MuFunctional& operator*=(const Rational& c);
  friend MuFunctional operator+(MuFunctional a, const MuFunctional& b) { return a += b; }
  friend MuFunctional operator*(MuFunctional a, const Rational& c) { return a *= c; }
  friend MuFunctional operator-(MuFunctional a, const MuFunctional& b);
};

// Generic stability condition (a0; a1..as; a_{s+1}) per the hypersurface case.
struct GenericCoeffs {
  Rational a0;
  std::vector<Rational> a;  // one entry per weight > 1
  Rational a_last;          // shared by the weight-1 variables
  MuFunctional functional(const WeightSystem& ws) const;
};

struct HMKValue {
  Rational first;
  std::optional<Rational> second;

  bool positive() const {
    if (!first.is_zero()) return first.sign() > 0;
    return second && second->sign() > 0;
  }
  friend bool operator==(const HMKValue& a, const HMKValue& b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator<(const HMKValue& a, const HMKValue& b) {
    if (a.first != b.first) return a.first < b.first;
    Rational as = a.second ? *a.second : Rational(0);
    Rational bs = b.second ? *b.second : Rational(0);
    return as < bs;
  }
};

struct LineBundleSpec {
  std::string name;  // preset name or "generic"
  MuFunctional primary;
  std::optional<MuFunctional> secondary;  // lexicographic epsilon-perturbation

  static LineBundleSpec generic(const WeightSystem& ws, const GenericCoeffs& gc);
};

// Named presets: quartics/sextics take delta0, delta1[, delta2], bal[, gor];
// the CI spaces take delta0, delta1[, delta2], bal, ter. Throws on mismatch.
LineBundleSpec preset_bundle(SpaceId space, const std::string& name);

// Precondition for CI families: reduce_ci has been applied for this rho.
HMKValue mu(const AnyFamily& fam, const OneParamSubgroup& rho, const LineBundleSpec& spec);

// Convenience: applies reduce_ci first for CI families.
HMKValue mu_reduced(const AnyFamily& fam, const OneParamSubgroup& rho, const LineBundleSpec& spec,
                    bool* obstructed = nullptr);

}  // namespace dpstab
