// Univariate polynomials in the deformation parameter t over Rational.
// These are the scalars of the weighted-polynomial layer: R = Q[t] viewed
// as a DVR truncation, with valuation val_t.
#pragma once

#include "dpstab/rational.hpp"

#include <vector>

namespace dpstab {

class TPoly {
public:
  TPoly() = default;
  TPoly(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
  TPoly(int c) : TPoly(Rational(c)) {}

  // c * t^e
  static TPoly term(const Rational& c, int e);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int val() const;                    // val_t; throws on zero
  const Rational& coeff(int e) const; // 0 outside range
  const std::vector<Rational>& coeffs() const { return c_; }

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  TPoly shifted(int e) const;     // * t^e, e may be negative if val >= -e
  TPoly divided_by_t(int e) const { return shifted(-e); }

  // Exact division; throws if the remainder is nonzero.
  TPoly divexact(const TPoly& d) const;

  Rational eval(const Rational& t) const;

  std::string str() const;  // for diagnostics

private:
  void trim();
  std::vector<Rational> c_;  // c_[e] = coefficient of t^e; trailing entry nonzero
};

}  // namespace dpstab
