#include "dpstab/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dpstab {

static const Rational kZero(0);

TPoly TPoly::term(const Rational& c, int e) {
  TPoly p;
  if (c.is_zero()) return p;
  if (e < 0) throw std::invalid_argument("TPoly: negative t-exponent");
  p.c_.assign(static_cast<size_t>(e) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int TPoly::val() const {
  if (is_zero()) throw std::domain_error("TPoly: val_t of zero");
  for (size_t e = 0; e < c_.size(); ++e)
    if (!c_[e].is_zero()) return static_cast<int>(e);
  throw std::logic_error("TPoly: untrimmed zero");
}

const Rational& TPoly::coeff(int e) const {
  if (e < 0 || e >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(e)];
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t e = 0; e < o.c_.size(); ++e) c_[e] += o.c_[e];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t e = 0; e < o.c_.size(); ++e) c_[e] -= o.c_[e];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

TPoly TPoly::shifted(int e) const {
  if (is_zero()) return TPoly();
  TPoly r;
  if (e >= 0) {
    r.c_.assign(c_.size() + static_cast<size_t>(e), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(e)] = c_[i];
    return r;
  }
  int k = -e;
  if (val() < k) throw std::domain_error("TPoly: t-shift below valuation");
  r.c_.assign(c_.begin() + k, c_.end());
  r.trim();
  return r;
}

TPoly TPoly::divexact(const TPoly& d) const {
  if (d.is_zero()) throw std::domain_error("TPoly: division by zero");
  if (is_zero()) return TPoly();
  TPoly rem = *this, q;
  int dd = d.degree();
  const Rational& lead = d.c_.back();
  if (rem.degree() < dd) throw std::domain_error("TPoly: inexact division");
  q.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Rational f = rem.c_.back() / lead;
    q.c_[static_cast<size_t>(k)] = f;
    rem -= d.shifted(k) * TPoly(f);
  }
  if (!rem.is_zero()) throw std::domain_error("TPoly: inexact division");
  q.trim();
  return q;
}

Rational TPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (size_t e = c_.size(); e-- > 0;) acc = acc * t + c_[e];
  return acc;
}

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t e = 0; e < c_.size(); ++e) {
    if (c_[e].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[e].str();
    if (e > 0) os << "*t^" << e;
    first = false;
  }
  return os.str();
}

}  // namespace dpstab
