// Truncated multivariate power series over Q, for local singularity models.
#pragma once

#include "dpstab/monomial.hpp"
#include "dpstab/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dpstab {

class Series {
public:
  Series() : n_(0), trunc_(0) {}
  Series(int nvars, int trunc) : n_(nvars), trunc_(trunc) {}

  static Series constant(int nvars, int trunc, const Rational& c);
  static Series variable(int nvars, int trunc, int var);

  int nvars() const { return n_; }
  int trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);  // drops orders >= trunc

  int order() const;  // min total degree; trunc() when zero
  Series jet(int upto) const;           // total degree <= upto
  Series graded_part(int degree) const; // the degree-d homogeneous slice

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  Series& operator*=(const Rational& c);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }

  friend bool operator==(const Series& a, const Series& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Series derivative(int var) const;
  // substitute var := value (order(value) >= 1 keeps truncation sound)
  Series substitute(int var, const Series& value) const;
  // linear change of all variables: var_i := sum_j m[i][j] var_j
  Series linear_change(const std::vector<std::vector<Rational>>& m) const;
  Series retruncate(int trunc) const;

  // Solve eq(vars) = 0 for variable v as a series in the others, given that
  // the coefficient of v is a unit; order-by-order fixpoint iteration.
  static std::optional<Series> solve_for(const Series& eq, int v);

  std::string str(const std::vector<std::string>& names) const;

private:
  int n_;
  int trunc_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace dpstab
