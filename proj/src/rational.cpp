#include "dpstab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace dpstab {

mpq_class Rational::from_ll(long long n) {
  mpz_class z;
  if (n >= 0) {
    z = static_cast<unsigned long>(n);
  } else {
    // avoid overflow on LLONG_MIN
    z = static_cast<unsigned long>(-(n + 1));
    z += 1;
    z = -z;
  }
  return mpq_class(z);
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_class q(from_ll(num));
  q /= from_ll(den);
  v_ = q;
  v_.canonicalize();
}

Rational::Rational(const std::string& s) {
  v_ = mpq_class(s);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

bool Rational::nth_root(unsigned k, Rational& out) const {
  if (k == 0) throw std::invalid_argument("Rational: 0th root");
  if (k == 1) { out = *this; return true; }
  if (is_zero()) { out = Rational(0); return true; }
  if (sign() < 0 && k % 2 == 0) return false;
  mpz_class n = num(), d = den();
  mpz_class rn, rd;
  int neg = 0;
  if (sgn(n) < 0) { n = -n; neg = 1; }
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return false;
  if (neg) rn = -rn;
  out = Rational(mpq_class(rn) / mpq_class(rd));
  return true;
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace dpstab
