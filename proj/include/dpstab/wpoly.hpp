// Sparse weighted-homogeneous polynomials over Q[t].
#pragma once

#include "dpstab/monomial.hpp"
#include "dpstab/tpoly.hpp"
#include "dpstab/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dpstab {

class WPoly {
public:
  using TermMap = std::map<Monomial, TPoly, GrevlexDesc>;

  WPoly() : n_(0) {}
  explicit WPoly(int nvars) : n_(nvars) {}

  static WPoly monomial(int nvars, const Monomial& m, const TPoly& c);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const TPoly& coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const TPoly& c);
  void set_term(const Monomial& m, const TPoly& c);

  WPoly operator-() const;
  WPoly& operator+=(const WPoly& o);
  WPoly& operator-=(const WPoly& o);
  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(const WPoly& a, const WPoly& b);
  WPoly& operator*=(const TPoly& c);
  friend WPoly operator*(WPoly a, const TPoly& c) { return a *= c; }
  WPoly pow(int k) const;

  friend bool operator==(const WPoly& a, const WPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // min over terms of val_t of the coefficient; throws on zero
  int t_valuation() const;
  WPoly normalize_t() const;     // divide by t^{t_valuation}
  WPoly t_shifted(int e) const;  // multiply by t^e (e >= -t_valuation)

  // weighted degree if all terms agree, otherwise nullopt; zero -> nullopt
  std::optional<long> homogeneous_degree(const WeightSystem& ws) const;
  // throws std::invalid_argument naming the offending monomial
  void check_homogeneous(const WeightSystem& ws, long degree,
                         const std::vector<std::string>* names = nullptr) const;

  WPoly partial_derivative(int var) const;
  WPoly partial_derivative_t() const;

  // substitute var := value (a polynomial in the remaining ring, same nvars)
  WPoly substitute_var(int var, const WPoly& value) const;
  // set the listed variables to zero
  WPoly restrict_zero(const std::vector<int>& vars) const;
  // drop the t-dependence: t := 0
  WPoly at_t0() const;

  Rational evaluate(const std::vector<Rational>& point, const Rational& t) const;

  // exact multivariate division (single divisor, grevlex); nullopt if not divisible
  std::optional<WPoly> divide_exact(const WPoly& divisor) const;

private:
  void prune(const Monomial& m);
  int n_;
  TermMap terms_;
};

// Printing / parsing against a declared variable list; "t" is reserved.
std::string print_wpoly(const WPoly& f, const std::vector<std::string>& names);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos);
  size_t position;
};

WPoly parse_wpoly(const std::string& text, const std::vector<std::string>& names);
// Parses and validates homogeneity of the declared degree.
WPoly parse_wpoly(const std::string& text, const WeightSystem& ws,
                  const std::vector<std::string>& names, long degree);

}  // namespace dpstab
