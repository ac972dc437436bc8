#include "dpstab/wpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dpstab {

static const TPoly kZeroT;

WPoly WPoly::monomial(int nvars, const Monomial& m, const TPoly& c) {
  WPoly p(nvars);
  p.add_term(m, c);
  return p;
}

const TPoly& WPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? kZeroT : it->second;
}

void WPoly::add_term(const Monomial& m, const TPoly& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("WPoly: arity mismatch");
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void WPoly::set_term(const Monomial& m, const TPoly& c) {
  terms_.erase(m);
  add_term(m, c);
}

WPoly WPoly::operator-() const {
  WPoly r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

WPoly& WPoly::operator+=(const WPoly& o) {
  if (n_ == 0 && !o.terms_.empty()) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) {
  if (n_ == 0 && !o.terms_.empty()) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
  WPoly r(a.n_ ? a.n_ : b.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

WPoly& WPoly::operator*=(const TPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = v * c;
  return *this;
}

WPoly WPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("WPoly: negative power");
  WPoly acc(n_);
  Monomial one(static_cast<size_t>(n_), 0);
  acc.add_term(one, TPoly(1));
  WPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

int WPoly::t_valuation() const {
  if (is_zero()) throw std::domain_error("t_valuation of zero polynomial");
  int v = -1;
  for (const auto& [m, c] : terms_) {
    int cv = c.val();
    if (v < 0 || cv < v) v = cv;
  }
  return v;
}

WPoly WPoly::normalize_t() const { return t_shifted(-t_valuation()); }

WPoly WPoly::t_shifted(int e) const {
  WPoly r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.shifted(e));
  return r;
}

std::optional<long> WPoly::homogeneous_degree(const WeightSystem& ws) const {
  if (is_zero()) return std::nullopt;
  long d = weighted_degree(ws, terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(ws, m) != d) return std::nullopt;
  return d;
}

void WPoly::check_homogeneous(const WeightSystem& ws, long degree,
                              const std::vector<std::string>* names) const {
  for (const auto& [m, c] : terms_) {
    if (weighted_degree(ws, m) != degree) {
      std::ostringstream os;
      os << "monomial ";
      if (names) {
        bool any = false;
        for (size_t i = 0; i < m.size(); ++i) {
          if (m[i] == 0) continue;
          if (any) os << "*";
          os << (*names)[i];
          if (m[i] > 1) os << "^" << m[i];
          any = true;
        }
        if (!any) os << "1";
      } else {
        for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "(") << m[i];
        os << ")";
      }
      os << " has weighted degree " << weighted_degree(ws, m) << ", expected " << degree;
      throw std::invalid_argument(os.str());
    }
  }
}

WPoly WPoly::partial_derivative(int var) const {
  WPoly r(n_);
  for (const auto& [m, c] : terms_) {
    if (m[static_cast<size_t>(var)] == 0) continue;
    Monomial d = m;
    int e = d[static_cast<size_t>(var)]--;
    r.add_term(d, c * TPoly(e));
  }
  return r;
}

WPoly WPoly::partial_derivative_t() const {
  WPoly r(n_);
  for (const auto& [m, c] : terms_) {
    TPoly dc;
    for (int e = 1; e <= c.degree(); ++e) dc += TPoly::term(c.coeff(e) * Rational(e), e - 1);
    r.add_term(m, dc);
  }
  return r;
}

WPoly WPoly::substitute_var(int var, const WPoly& value) const {
  WPoly r(n_);
  std::vector<WPoly> powers;  // powers[k] = value^k, built lazily
  powers.push_back(WPoly::monomial(n_, Monomial(static_cast<size_t>(n_), 0), TPoly(1)));
  for (const auto& [m, c] : terms_) {
    int e = m[static_cast<size_t>(var)];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[static_cast<size_t>(var)] = 0;
    r += powers[static_cast<size_t>(e)] * WPoly::monomial(n_, rest, c);
  }
  return r;
}

WPoly WPoly::restrict_zero(const std::vector<int>& vars) const {
  WPoly r(n_);
  for (const auto& [m, c] : terms_) {
    bool drop = false;
    for (int v : vars)
      if (m[static_cast<size_t>(v)] > 0) {
        drop = true;
        break;
      }
    if (!drop) r.add_term(m, c);
  }
  return r;
}

WPoly WPoly::at_t0() const {
  WPoly r(n_);
  for (const auto& [m, c] : terms_) r.add_term(m, TPoly(c.coeff(0)));
  return r;
}

Rational WPoly::evaluate(const std::vector<Rational>& point, const Rational& t) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c.eval(t);
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

std::optional<WPoly> WPoly::divide_exact(const WPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("WPoly: division by zero");
  WPoly rem = *this, q(n_);
  const auto& dlead = *divisor.terms_.begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.begin();
    if (!monomial_divides(dlead.first, rlead.first)) return std::nullopt;
    TPoly qc;
    try {
      qc = rlead.second.divexact(dlead.second);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    Monomial qm = monomial_div(rlead.first, dlead.first);
    q.add_term(qm, qc);
    rem -= divisor * WPoly::monomial(n_, qm, qc);
  }
  return q;
}

}  // namespace dpstab
