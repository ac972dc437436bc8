#include "dpstab/series.hpp"

#include <sstream>
#include <stdexcept>

namespace dpstab {

Series Series::constant(int nvars, int trunc, const Rational& c) {
  Series s(nvars, trunc);
  s.add_term(Monomial(static_cast<size_t>(nvars), 0), c);
  return s;
}

Series Series::variable(int nvars, int trunc, int var) {
  Series s(nvars, trunc);
  Monomial m(static_cast<size_t>(nvars), 0);
  m[static_cast<size_t>(var)] = 1;
  s.add_term(m, Rational(1));
  return s;
}

Rational Series::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero() || total_degree(m) >= trunc_) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Series::order() const {
  int best = trunc_;
  for (const auto& [m, c] : terms_) best = std::min(best, total_degree(m));
  return best;
}

Series Series::jet(int upto) const {
  Series r(n_, trunc_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) <= upto) r.add_term(m, c);
  return r;
}

Series Series::graded_part(int degree) const {
  Series r(n_, trunc_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == degree) r.add_term(m, c);
  return r;
}

Series Series::operator-() const {
  Series r(n_, trunc_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Series& Series::operator+=(const Series& o) {
  if (n_ == 0) {
    n_ = o.n_;
    trunc_ = o.trunc_;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (n_ == 0) {
    n_ = o.n_;
    trunc_ = o.trunc_;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  Series r(a.n_ ? a.n_ : b.n_, a.n_ ? a.trunc_ : b.trunc_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

Series& Series::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Series Series::derivative(int var) const {
  Series r(n_, trunc_);
  for (const auto& [m, c] : terms_) {
    int e = m[static_cast<size_t>(var)];
    if (e == 0) continue;
    Monomial d = m;
    d[static_cast<size_t>(var)]--;
    r.add_term(d, c * Rational(e));
  }
  return r;
}

Series Series::substitute(int var, const Series& value) const {
  Series r(n_, trunc_);
  std::vector<Series> powers{Series::constant(n_, trunc_, Rational(1))};
  for (const auto& [m, c] : terms_) {
    int e = m[static_cast<size_t>(var)];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[static_cast<size_t>(var)] = 0;
    Series part(n_, trunc_);
    part.add_term(rest, c);
    r += part * powers[static_cast<size_t>(e)];
  }
  return r;
}

Series Series::linear_change(const std::vector<std::vector<Rational>>& m) const {
  std::vector<Series> images;
  for (int i = 0; i < n_; ++i) {
    Series im(n_, trunc_);
    for (int j = 0; j < n_; ++j) {
      Monomial mm(static_cast<size_t>(n_), 0);
      mm[static_cast<size_t>(j)] = 1;
      im.add_term(mm, m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    images.push_back(im);
  }
  Series r(n_, trunc_);
  for (const auto& [mon, c] : terms_) {
    Series part = Series::constant(n_, trunc_, c);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < mon[static_cast<size_t>(i)]; ++k) part = part * images[static_cast<size_t>(i)];
    r += part;
  }
  return r;
}

Series Series::retruncate(int trunc) const {
  Series r(n_, trunc);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

std::optional<Series> Series::solve_for(const Series& eq, int v) {
  Monomial unit(static_cast<size_t>(eq.n_), 0);
  unit[static_cast<size_t>(v)] = 1;
  Rational c = eq.coeff(unit);
  if (c.is_zero()) return std::nullopt;
  if (!eq.coeff(Monomial(static_cast<size_t>(eq.n_), 0)).is_zero()) return std::nullopt;
  Series sol(eq.n_, eq.trunc_);
  for (int pass = 0; pass <= eq.trunc_ + 1; ++pass) {
    Series val = eq.substitute(v, sol);
    if (val.is_zero()) break;
    Series next = sol;
    val *= Rational(1) / c;
    next -= val;
    if (next == sol) break;
    sol = next;
  }
  // the solution must not involve v itself
  Series check = eq.substitute(v, sol);
  if (!check.is_zero()) return std::nullopt;
  return sol;
}

std::string Series::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    os << (first ? "" : " + ") << c.str();
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "*" << names[i];
      if (m[i] > 1) os << "^" << m[i];
    }
    first = false;
  }
  return os.str();
}

}  // namespace dpstab
