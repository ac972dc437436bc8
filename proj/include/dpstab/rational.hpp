// Exact arbitrary-precision rationals (GMP-backed, value semantics).
//
// A thin wrapper around mpq_class that returns plain values from every
// operator, so the type can be used as an Eigen scalar without gmpxx
// expression templates leaking into deduced types.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace dpstab {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<long int>(n)) {}
  Rational(long long n) { v_ = from_ll(n); }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const std::string& s);

  static Rational of(long long num, long long den = 1) { return Rational(num, den); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

  // Exact k-th root if it exists in Q (k >= 1), else returns false.
  bool nth_root(unsigned k, Rational& out) const;

  std::string str() const;

private:
  static mpq_class from_ll(long long n);
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dpstab

namespace Eigen {

template <typename T> struct NumTraits;

template <> struct NumTraits<dpstab::Rational> {
  using Real = dpstab::Rational;
  using NonInteger = dpstab::Rational;
  using Literal = dpstab::Rational;
  using Nested = dpstab::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30,
  };
  static inline Real epsilon() { return dpstab::Rational(0); }
  static inline Real dummy_precision() { return dpstab::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
