#include "dpstab/destab.hpp"

#include "dpstab/linalg.hpp"
#include "univariate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dpstab {
namespace detail {

std::optional<std::vector<mpz_class>> divisors(mpz_class z) {
  z = abs(z);
  if (z == 0) return std::vector<mpz_class>{};
  std::map<mpz_class, int> fac;
  mpz_class p = 2;
  long guard = 0;
  while (z > 1) {
    if (++guard > 2000000) return std::nullopt;
    if (p * p > z) {
      fac[z]++;
      break;
    }
    if (z % p == 0) {
      fac[p]++;
      z /= p;
    } else {
      p += (p == 2) ? 1 : 2;
      if (p > 1000000) {
        if (mpz_probab_prime_p(z.get_mpz_t(), 25)) {
          fac[z]++;
          break;
        }
        return std::nullopt;
      }
    }
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : fac) {
    size_t sz = divs.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pw);
    }
    if (divs.size() > 4096) return std::nullopt;
  }
  return divs;
}

std::optional<std::vector<Rational>> rational_roots(const UPoly& p) {
  UPoly q = p;
  utrim(q);
  if (q.empty()) return std::nullopt;  // zero polynomial: every value is a root
  std::vector<Rational> roots;
  // strip u | p
  size_t low = 0;
  while (low < q.size() && q[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    q.erase(q.begin(), q.begin() + static_cast<long>(low));
  }
  if (q.size() <= 1) return roots;
  // clear denominators
  mpz_class scale = 1;
  for (const Rational& c : q) scale = scale / gcd(scale, c.den()) * c.den();
  std::vector<mpz_class> ic;
  for (const Rational& c : q) ic.push_back(c.num() * (scale / c.den()));
  auto d0 = divisors(ic.front());
  auto dn = divisors(ic.back());
  if (!d0 || !dn) return std::nullopt;
  std::set<Rational> seen;
  for (const mpz_class& a : *d0)
    for (const mpz_class& b : *dn)
      for (int s : {1, -1}) {
        Rational cand(mpq_class(s * a) / mpq_class(b));
        if (seen.count(cand)) continue;
        seen.insert(cand);
        Rational acc(0);
        for (size_t k = q.size(); k-- > 0;) acc = acc * cand + q[k];
        if (acc.is_zero()) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

namespace {

using detail::UPoly;

Monomial unit_mon(int n, int i) {
  Monomial m(static_cast<size_t>(n), 0);
  m[static_cast<size_t>(i)] = 1;
  return m;
}

OneParamSubgroup unit_rho(int n, int i) {
  std::vector<int> w(static_cast<size_t>(n), 0);
  w[static_cast<size_t>(i)] = 1;
  return OneParamSubgroup(w);
}

// t-free form made of the level-`level` slice of f under rho
WPoly slice_at(const WPoly& f, const OneParamSubgroup& rho, long level) {
  WPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    long e = level - rho_weight(rho.w, m);
    if (e < 0) continue;
    const Rational& cc = c.coeff(static_cast<int>(e));
    if (!cc.is_zero()) r.add_term(m, TPoly(cc));
  }
  return r;
}

Rational tconst(const TPoly& c) {
  if (c.degree() > 0) throw std::invalid_argument("expected a t-free coefficient");
  return c.coeff(0);
}

// ---------------------------------------------------------------------------
// binary forms in two fixed weight-1 variables, as univariate polynomials

UPoly to_upoly(const WPoly& f, int vi, int vj, int deg) {
  UPoly p(static_cast<size_t>(deg) + 1, Rational(0));
  for (const auto& [m, c] : f.terms()) {
    for (size_t q = 0; q < m.size(); ++q)
      if (m[q] != 0 && static_cast<int>(q) != vi && static_cast<int>(q) != vj)
        throw std::invalid_argument("to_upoly: not a binary form");
    p[static_cast<size_t>(m[static_cast<size_t>(vj)])] += tconst(c);
  }
  detail::utrim(p);
  return p;
}

WPoly from_upoly(const UPoly& p, int n, int vi, int vj, int deg) {
  WPoly f(n);
  for (size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    Monomial m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(vj)] = static_cast<int>(k);
    m[static_cast<size_t>(vi)] = deg - static_cast<int>(k);
    f.add_term(m, TPoly(p[k]));
  }
  return f;
}

int min_exponent(const WPoly& f, int v) {
  int m = -1;
  for (const auto& [mon, c] : f.terms()) {
    int e = mon[static_cast<size_t>(v)];
    if (m < 0 || e < m) m = e;
  }
  return m < 0 ? 0 : m;
}

// gcd of two binary forms in variables (vi, vj)
WPoly binary_gcd(const WPoly& f, const WPoly& g, int vi, int vj) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  int n = f.nvars();
  auto degree_of = [&](const WPoly& h) {
    const auto& m = h.terms().begin()->first;
    return m[static_cast<size_t>(vi)] + m[static_cast<size_t>(vj)];
  };
  int df = degree_of(f), dg = degree_of(g);
  UPoly pf = to_upoly(f, vi, vj, df), pg = to_upoly(g, vi, vj, dg);
  UPoly h = detail::ugcd(pf, pg);
  int xmf = df - detail::udeg(pf), xmg = dg - detail::udeg(pg);
  int xcommon = std::min(xmf, xmg);
  WPoly out = from_upoly(h, n, vi, vj, detail::udeg(h));
  if (xcommon > 0) {
    Monomial m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(vi)] = xcommon;
    out = out * WPoly::monomial(n, m, TPoly(1));
  }
  return out;
}

// exact square root of a t-free form; nullopt if it is not a square over Q
std::optional<WPoly> wpoly_sqrt(const WPoly& s) {
  if (s.is_zero()) return WPoly(s.nvars());
  const auto& [lm, lc] = *s.terms().begin();
  Monomial half = lm;
  for (auto& e : half) {
    if (e % 2) return std::nullopt;
    e /= 2;
  }
  Rational root;
  if (!tconst(lc).nth_root(2, root)) return std::nullopt;
  WPoly e = WPoly::monomial(s.nvars(), half, TPoly(root));
  WPoly lead2 = e * TPoly(Rational(2));
  for (int guard = 0; guard < 20000; ++guard) {
    WPoly r = s - e * e;
    if (r.is_zero()) return e;
    const auto& [rm, rc] = *r.terms().begin();
    // next term: lead(r) / (2 lead(e))
    Monomial q = rm;
    bool ok = monomial_divides(half, rm);
    if (!ok) return std::nullopt;
    q = monomial_div(rm, half);
    WPoly next = WPoly::monomial(s.nvars(), q, TPoly(tconst(rc) / (Rational(2) * root)));
    // strict grevlex progress
    if (!grevlex_less(monomial_mul(q, half), lm) && !(monomial_mul(q, half) == lm))
      return std::nullopt;
    WPoly e2 = e + next;
    if (e2 == e) return std::nullopt;
    e = e2;
  }
  return std::nullopt;
}

std::vector<int> weight_one_vars(const WeightSystem& ws) {
  std::vector<int> v;
  for (int i = 0; i < ws.n(); ++i)
    if (ws.weight(i) == 1) v.push_back(i);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<OneParamSubgroup> enumerate_ops(const WeightSystem& ws, int w_max) {
  int n = ws.n();
  std::vector<OneParamSubgroup> out;
  std::vector<int> w(static_cast<size_t>(n), 0);
  for (;;) {
    // skip zero, non-primitive, and rho_irr-dominating vectors
    int g = 0;
    bool dominates = true;
    for (int i = 0; i < n; ++i) {
      g = std::gcd(g, w[static_cast<size_t>(i)]);
      if (w[static_cast<size_t>(i)] < ws.weight(i)) dominates = false;
    }
    if (g == 1 && !dominates) out.push_back(OneParamSubgroup(w));
    int i = n - 1;
    while (i >= 0 && w[static_cast<size_t>(i)] == w_max) w[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<size_t>(i)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// factor detection

namespace {

DetectStatus match_two(const WPoly& form, const WeightSystem& ws, int vi, int vj, WPoly* out) {
  // candidates x_vi - lambda x_vj; collect per-residual-monomial polynomials in lambda
  int n = form.nvars();
  std::map<Monomial, UPoly> rows;
  for (const auto& [m, c] : form.terms()) {
    Monomial res = m;
    int e = res[static_cast<size_t>(vi)];
    res[static_cast<size_t>(vi)] = 0;
    res[static_cast<size_t>(vj)] += e;
    UPoly& p = rows[res];
    if (static_cast<int>(p.size()) <= e) p.resize(static_cast<size_t>(e) + 1, Rational(0));
    p[static_cast<size_t>(e)] += tconst(c);
  }
  UPoly g;
  bool first = true;
  for (auto& [m, p] : rows) {
    detail::utrim(p);
    if (first) {
      g = p;
      first = false;
    } else {
      g = detail::ugcd(g, p);
    }
    if (detail::udeg(g) == 0 && !g.empty()) return DetectStatus::None;
  }
  if (g.empty()) return DetectStatus::None;  // form was zero on the locus? defensive
  auto roots = detail::rational_roots(g);
  if (!roots) return DetectStatus::Unknown;
  for (const Rational& r : *roots) {
    WPoly ell = WPoly::monomial(n, unit_mon(n, vi), TPoly(1)) -
                WPoly::monomial(n, unit_mon(n, vj), TPoly(r));
    if (form.divide_exact(ell)) {
      *out = ell;
      return DetectStatus::Found;
    }
  }
  return detail::udeg(g) > 0 ? DetectStatus::Unknown : DetectStatus::None;
}

// bivariate polynomials in (lambda, nu) as UPoly-in-nu with UPoly coefficients
using BiPoly = std::vector<UPoly>;  // coeff of nu^k is a UPoly in lambda

void bitrim(BiPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

BiPoly bi_sub(BiPoly a, const BiPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = detail::usub(a[i], b[i]);
  bitrim(a);
  return a;
}

// Sylvester resultant of two UPoly-coefficient polynomials, eliminating nu.
std::optional<UPoly> resultant_nu(const BiPoly& a, const BiPoly& b) {
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  if (da < 1 || db < 1) return std::nullopt;
  size_t n = static_cast<size_t>(da + db);
  std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a[static_cast<size_t>(da - k)];
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) m[static_cast<size_t>(db + r)][static_cast<size_t>(r + k)] = b[static_cast<size_t>(db - k)];
  // Bareiss over Q[lambda]
  UPoly prev{Rational(1)};
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      size_t p = k + 1;
      while (p < n && m[p][k].empty()) ++p;
      if (p == n) return UPoly{};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        UPoly num = detail::usub(detail::umul(m[k][k], m[i][j]), detail::umul(m[i][k], m[k][j]));
        auto q = detail::udiv_exact(num, prev);
        if (!q) return std::nullopt;
        m[i][j] = *q;
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  UPoly res = m[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : res) c = -c;
  return res;
}

DetectStatus match_three(const WPoly& form, const WeightSystem& ws, int vi, int vj, int vk,
                         WPoly* out) {
  // candidates x_vi - lambda x_vj - nu x_vk
  int n = form.nvars();
  std::map<Monomial, BiPoly> rows;
  for (const auto& [m, c] : form.terms()) {
    int e = m[static_cast<size_t>(vi)];
    // expand (lambda x_j + nu x_k)^e binomially
    for (int a = 0; a <= e; ++a) {  // lambda^a nu^(e-a)
      Monomial res = m;
      res[static_cast<size_t>(vi)] = 0;
      res[static_cast<size_t>(vj)] += a;
      res[static_cast<size_t>(vk)] += e - a;
      mpz_class bc;
      mpz_bin_uiui(bc.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(a));
      BiPoly& p = rows[res];
      if (static_cast<int>(p.size()) <= e - a) p.resize(static_cast<size_t>(e - a) + 1);
      UPoly& q = p[static_cast<size_t>(e - a)];
      if (static_cast<int>(q.size()) <= a) q.resize(static_cast<size_t>(a) + 1, Rational(0));
      q[static_cast<size_t>(a)] += tconst(c) * Rational(mpq_class(bc));
    }
  }
  std::vector<BiPoly> polys;
  for (auto& [m, p] : rows) {
    bitrim(p);
    if (!p.empty()) polys.push_back(p);
  }
  if (polys.empty()) return DetectStatus::None;
  // a polynomial that is a nonzero constant kills all candidates
  for (const BiPoly& p : polys)
    if (p.size() == 1 && detail::udeg(p[0]) == 0) return DetectStatus::None;
  // eliminate nu from the first two genuinely bivariate polynomials
  std::optional<UPoly> res;
  for (size_t i = 0; i < polys.size() && !res; ++i)
    for (size_t j = i + 1; j < polys.size() && !res; ++j) {
      if (polys[i].size() < 2 || polys[j].size() < 2) continue;
      auto r = resultant_nu(polys[i], polys[j]);
      if (r && !r->empty()) res = r;
    }
  if (!res) {
    // try polynomials univariate in lambda directly
    UPoly g;
    bool found = false;
    for (const BiPoly& p : polys)
      if (p.size() == 1) {
        g = found ? detail::ugcd(g, p[0]) : p[0];
        found = true;
      }
    if (!found) return DetectStatus::Unknown;
    res = g;
  }
  auto lroots = detail::rational_roots(*res);
  if (!lroots) return DetectStatus::Unknown;
  for (const Rational& lam : *lroots) {
    // specialize lambda and find common rational nu
    UPoly g;
    bool first = true;
    for (const BiPoly& p : polys) {
      UPoly spec;
      for (size_t k = 0; k < p.size(); ++k) {
        Rational acc(0);
        for (size_t a = p[k].size(); a-- > 0;) acc = acc * lam + p[k][a];
        if (static_cast<int>(spec.size()) <= static_cast<int>(k))
          spec.resize(k + 1, Rational(0));
        spec[k] = acc;
      }
      detail::utrim(spec);
      g = first ? spec : detail::ugcd(g, spec);
      first = false;
    }
    auto nroots = detail::rational_roots(g);
    if (!nroots) continue;
    for (const Rational& nu : *nroots) {
      WPoly ell = WPoly::monomial(n, unit_mon(n, vi), TPoly(1)) -
                  WPoly::monomial(n, unit_mon(n, vj), TPoly(lam)) -
                  WPoly::monomial(n, unit_mon(n, vk), TPoly(nu));
      if (form.divide_exact(ell)) {
        *out = ell;
        return DetectStatus::Found;
      }
    }
  }
  return DetectStatus::Unknown;
}

}  // namespace

FactorDetectResult linear_factor_detect(const WPoly& form, const WeightSystem& ws) {
  if (form.is_zero()) throw std::invalid_argument("linear_factor_detect: zero form");
  int n = form.nvars();
  // single variables, any weight
  for (int i = 0; i < n; ++i) {
    if (min_exponent(form, i) >= 1)
      return {DetectStatus::Found, WPoly::monomial(n, unit_mon(n, i), TPoly(1))};
  }
  std::vector<int> ones = weight_one_vars(ws);
  if (ones.size() < 2) return {DetectStatus::None, std::nullopt};
  if (ones.size() > 3) return {DetectStatus::Unknown, std::nullopt};
  bool unknown = false;
  WPoly out(n);
  if (ones.size() == 2) {
    DetectStatus st = match_two(form, ws, ones[0], ones[1], &out);
    if (st == DetectStatus::Found) return {st, out};
    unknown = st == DetectStatus::Unknown;
  } else {
    DetectStatus st = match_three(form, ws, ones[0], ones[1], ones[2], &out);
    if (st == DetectStatus::Found) return {st, out};
    unknown = unknown || st == DetectStatus::Unknown;
    st = match_two(form, ws, ones[1], ones[2], &out);
    if (st == DetectStatus::Found) return {st, out};
    unknown = unknown || st == DetectStatus::Unknown;
  }
  return {unknown ? DetectStatus::Unknown : DetectStatus::None, std::nullopt};
}

// ---------------------------------------------------------------------------
// degree splitter for the CI composite move

std::optional<std::pair<WPoly, WPoly>> split_half_degree(const WPoly& s, const WeightSystem& ws,
                                                         int k) {
  if (s.is_zero()) return std::nullopt;
  int n = s.nvars();
  auto verify = [&](const WPoly& a) -> std::optional<std::pair<WPoly, WPoly>> {
    if (a.is_zero()) return std::nullopt;
    auto b = s.divide_exact(a);
    if (!b) return std::nullopt;
    return std::make_pair(a, *b);
  };

  // pivot of weight k appearing in s
  int pivot = -1;
  for (int i = 0; i < n && pivot < 0; ++i)
    if (ws.weight(i) == k)
      for (const auto& [m, c] : s.terms())
        if (m[static_cast<size_t>(i)] > 0) {
          pivot = i;
          break;
        }
  if (pivot >= 0) {
    // s = s2 p^2 + s1 p + s0 with s2 a constant
    WPoly s2(n), s1(n), s0(n);
    for (const auto& [m, c] : s.terms()) {
      Monomial r = m;
      int e = r[static_cast<size_t>(pivot)];
      r[static_cast<size_t>(pivot)] = 0;
      if (e == 0)
        s0.add_term(r, c);
      else if (e == 1)
        s1.add_term(r, c);
      else if (e == 2)
        s2.add_term(r, c);
      else
        return std::nullopt;
    }
    WPoly p = WPoly::monomial(n, unit_mon(n, pivot), TPoly(1));
    if (!s2.is_zero()) {
      Rational c2 = tconst(s2.terms().begin()->second);
      WPoly disc = s1 * s1 - s2 * s0 * TPoly(Rational(4));
      auto e = wpoly_sqrt(disc);
      if (!e) return std::nullopt;
      for (int sgn : {1, -1}) {
        WPoly half = (s1 - *e * TPoly(Rational(sgn))) * TPoly(Rational(1, 2) / c2);
        if (auto r = verify(p + half)) return r;
      }
      return std::nullopt;
    }
    if (!s1.is_zero()) {
      auto q = s0.divide_exact(s1);
      if (q) {
        if (auto r = verify(p + *q)) return r;
      }
      return std::nullopt;
    }
    return std::nullopt;  // pivot seen but no usable p-structure
  }

  // mid-weight variable (weight strictly between 1 and k), e.g. z for cubics
  int mid = -1;
  for (int i = 0; i < n; ++i)
    if (ws.weight(i) > 1 && ws.weight(i) < k) {
      if (mid >= 0 && ws.weight(i) != ws.weight(mid)) return std::nullopt;
      if (mid < 0) mid = i;
    }
  std::vector<int> ones = weight_one_vars(ws);
  if (ones.size() != 2) return std::nullopt;
  int vx = ones[0], vy = ones[1];

  if (mid >= 0) {
    int cm = ws.weight(mid);
    if (2 * cm <= k) return std::nullopt;  // factors could be quadratic in mid
    // factors are linear in mid: s = s2 z^2 + s1 z + s0 in binary coefficients
    WPoly s2(n), s1(n), s0(n);
    for (const auto& [m, c] : s.terms()) {
      Monomial r = m;
      int e = r[static_cast<size_t>(mid)];
      r[static_cast<size_t>(mid)] = 0;
      if (e == 0)
        s0.add_term(r, c);
      else if (e == 1)
        s1.add_term(r, c);
      else if (e == 2)
        s2.add_term(r, c);
      else
        return std::nullopt;  // z^3 present: no split into degree-k factors
    }
    WPoly z = WPoly::monomial(n, unit_mon(n, mid), TPoly(1));
    if (!s2.is_zero()) {
      WPoly disc = s1 * s1 - s2 * s0 * TPoly(Rational(4));
      auto e = wpoly_sqrt(disc);
      if (!e) return std::nullopt;
      for (int sgn : {1, -1}) {
        WPoly num = s1 - *e * TPoly(Rational(sgn));  // 2 s2 z + num, up to the gcd
        WPoly g = binary_gcd(s2 * TPoly(Rational(2)), num, vx, vy);
        if (g.is_zero()) continue;
        auto a1 = (s2 * TPoly(Rational(2))).divide_exact(g);
        auto a3 = num.divide_exact(g);
        if (!a1 || !a3) continue;
        WPoly cand = *a1 * z + *a3;
        if (auto r = verify(cand)) return r;
      }
      return std::nullopt;
    }
    if (!s1.is_zero()) {
      WPoly g = binary_gcd(s1, s0, vx, vy);
      // need a degree-k binary divisor of g
      auto deg_of = [&](const WPoly& h) {
        return h.is_zero() ? -1L : weighted_degree(ws, h.terms().begin()->first);
      };
      WPoly cand = g;
      while (deg_of(cand) > k) {
        FactorDetectResult f = linear_factor_detect(cand, ws);
        if (f.status != DetectStatus::Found) return std::nullopt;
        auto q = cand.divide_exact(*f.factor);
        if (!q) return std::nullopt;
        cand = *q;
      }
      if (deg_of(cand) == k) {
        if (auto r = verify(cand)) return r;
      }
      return std::nullopt;
    }
    return std::nullopt;
  }

  // pure binary case: peel rational linear factors and assemble a degree-k divisor
  WPoly rest = s;
  std::vector<WPoly> linears;
  for (;;) {
    if (rest.is_zero() || total_degree(rest.terms().begin()->first) == 0) break;
    FactorDetectResult f = linear_factor_detect(rest, ws);
    if (f.status != DetectStatus::Found) break;
    auto q = rest.divide_exact(*f.factor);
    if (!q) break;
    linears.push_back(*f.factor);
    rest = *q;
    if (static_cast<int>(linears.size()) > 2 * k) break;
  }
  long rest_deg = rest.is_zero() ? 0 : weighted_degree(ws, rest.terms().begin()->first);
  WPoly acc = WPoly::monomial(n, Monomial(static_cast<size_t>(n), 0), TPoly(1));
  long need = k;
  if (rest_deg == k) {
    if (auto r = verify(rest)) return r;
  }
  if (rest_deg > 0 && rest_deg < k) {
    acc = rest;
    need = k - rest_deg;
  } else if (rest_deg > k) {
    return std::nullopt;
  }
  for (const WPoly& l : linears) {
    if (need == 0) break;
    acc = acc * l;
    --need;
  }
  if (need == 0)
    if (auto r = verify(acc)) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// hill climb

namespace {

long reduced_mult_F(const AnyFamily& fam, const OneParamSubgroup& rho) {
  if (std::holds_alternative<HypersurfaceFamily>(fam))
    return mult(std::get<HypersurfaceFamily>(fam).F, rho);
  ReduceResult r = reduce_ci(std::get<CIFamily>(fam), rho);
  return mult(r.fam.F, rho);
}

AnyFamily apply_subst(const AnyFamily& fam, const GradedSubstitution& sigma) {
  if (std::holds_alternative<HypersurfaceFamily>(fam)) {
    const auto& h = std::get<HypersurfaceFamily>(fam);
    return HypersurfaceFamily(h.ws, h.degree, sigma.apply(h.F));
  }
  const auto& ci = std::get<CIFamily>(fam);
  return CIFamily(ci.ws, ci.deg_F, ci.deg_H, sigma.apply(ci.F), sigma.apply(ci.H));
}

// one slice-cancellation round; returns the substitution or nullopt
std::optional<GradedSubstitution> slice_round(const AnyFamily& fam, const OneParamSubgroup& rho,
                                              const SearchBudget& budget) {
  const WeightSystem& ws = family_weights(fam);
  int n = ws.n();
  WPoly F = family_F(fam);
  if (std::holds_alternative<CIFamily>(fam))
    F = reduce_ci(std::get<CIFamily>(fam), rho).fam.F;
  long m = mult(F, rho);
  WPoly slice = leading_form(F, rho);
  if (slice.is_zero()) return std::nullopt;

  struct Unknown {
    int var;
    Monomial mon;
    int texp;
    WPoly contrib;  // t-free form
  };
  std::vector<Unknown> unknowns;
  std::set<Monomial> support;
  for (const auto& [mm, cc] : slice.terms()) support.insert(mm);
  for (int i = 0; i < n; ++i) {
    WPoly di = F.partial_derivative(i);
    if (di.is_zero()) continue;
    WPoly dslice = slice_at(di, rho, m - rho.w[static_cast<size_t>(i)]);
    if (dslice.is_zero()) continue;
    for (const Monomial& beta : enumerate_monomials(ws, ws.weight(i))) {
      if (beta == unit_mon(n, i)) continue;
      long e = rho.w[static_cast<size_t>(i)] - rho_weight(rho.w, beta);
      if (e < 0 || e > budget.t_degree_cap) continue;
      WPoly contrib = dslice * WPoly::monomial(n, beta, TPoly(1));
      if (contrib.is_zero()) continue;
      unknowns.push_back({i, beta, static_cast<int>(e), contrib});
      for (const auto& [mm, cc] : contrib.terms()) support.insert(mm);
    }
  }
  if (unknowns.empty()) return std::nullopt;
  // prescreen: every slice monomial must be reachable
  for (const auto& [mm, cc] : slice.terms()) {
    bool reachable = false;
    for (const Unknown& u : unknowns)
      if (!u.contrib.coeff(mm).is_zero()) {
        reachable = true;
        break;
      }
    if (!reachable) return std::nullopt;
  }
  std::map<Monomial, int> rowof;
  for (const Monomial& mm : support) rowof.emplace(mm, static_cast<int>(rowof.size()));
  MatQ A = MatQ::Zero(static_cast<Eigen::Index>(rowof.size()),
                      static_cast<Eigen::Index>(unknowns.size()));
  VecQ b = VecQ::Zero(static_cast<Eigen::Index>(rowof.size()));
  for (size_t j = 0; j < unknowns.size(); ++j)
    for (const auto& [mm, cc] : unknowns[j].contrib.terms())
      A(rowof.at(mm), static_cast<Eigen::Index>(j)) += tconst(cc);
  for (const auto& [mm, cc] : slice.terms()) b(rowof.at(mm)) = -tconst(cc);
  auto x = solve_exact(A, b);
  if (!x) return std::nullopt;
  std::vector<WPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(WPoly::monomial(n, unit_mon(n, i), TPoly(1)));
  bool nontrivial = false;
  for (size_t j = 0; j < unknowns.size(); ++j) {
    const Rational& u = (*x)(static_cast<Eigen::Index>(j));
    if (u.is_zero()) continue;
    images[static_cast<size_t>(unknowns[j].var)] +=
        WPoly::monomial(n, unknowns[j].mon, TPoly::term(u, unknowns[j].texp));
    nontrivial = true;
  }
  if (!nontrivial) return std::nullopt;
  try {
    GradedSubstitution sigma(ws, std::move(images));
    if (!sigma.over_R()) return std::nullopt;
    return sigma;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// the CI composite: sigma on a degree-deg_H coordinate whose H-slice vanishes
std::optional<GradedSubstitution> ci_split_move(const CIFamily& ci, const OneParamSubgroup& rho) {
  const WeightSystem& ws = ci.ws;
  int n = ws.n();
  int v = -1;
  for (int i = 0; i < n; ++i) {
    if (rho.w[static_cast<size_t>(i)] == 0) continue;
    if (v >= 0) return std::nullopt;
    v = i;
  }
  if (v < 0 || rho.w[static_cast<size_t>(v)] != 1) return std::nullopt;
  if (ws.weight(v) != ci.deg_H) return std::nullopt;
  if (mult(ci.H, rho) < 1) return std::nullopt;  // H has a rho-level-0 part
  WPoly s = slice_at(ci.F, rho, 0);
  if (s.is_zero()) return std::nullopt;
  for (const auto& [m, c] : s.terms())
    if (m[static_cast<size_t>(v)] > 0) return std::nullopt;
  auto split = split_half_degree(s, ws, ci.deg_H);
  if (!split) return std::nullopt;
  long base = mult(reduce_ci(ci, rho).fam.F, rho);
  std::optional<GradedSubstitution> best;
  long best_mult = base;
  for (const WPoly& factor : {split->first, split->second}) {
    if (factor.homogeneous_degree(ws) != std::optional<long>(ci.deg_H)) continue;
    GradedSubstitution sigma = GradedSubstitution::elementary(ws, v, factor);
    try {
      CIFamily moved(ws, ci.deg_F, ci.deg_H, sigma.apply(ci.F), sigma.apply(ci.H));
      long mres = mult(reduce_ci(moved, rho).fam.F, rho);
      if (mres > best_mult) {
        best_mult = mres;
        best = sigma;
      }
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  return best;
}

}  // namespace

GradedSubstitution kempf_hill_climb(const AnyFamily& fam, const OneParamSubgroup& rho,
                                    const SearchBudget& budget) {
  const WeightSystem& ws = family_weights(fam);
  GradedSubstitution total = GradedSubstitution::identity(ws);
  AnyFamily cur = fam;
  long initial = reduced_mult_F(fam, rho);
  for (int round = 0; round < budget.hill_rounds; ++round) {
    auto sigma = slice_round(cur, rho, budget);
    if (!sigma) break;
    AnyFamily next = apply_subst(cur, *sigma);
    total = compose(*sigma, total);
    cur = std::move(next);
  }
  if (reduced_mult_F(cur, rho) > initial) return total;
  // CI factor-split composite
  if (std::holds_alternative<CIFamily>(fam)) {
    auto sigma = ci_split_move(std::get<CIFamily>(fam), rho);
    if (sigma) return *sigma;
  }
  return GradedSubstitution::identity(ws);
}

// ---------------------------------------------------------------------------
// destabilizer search and the semistabilization loop

namespace {

struct Candidate {
  Move move;
  HMKValue mu;
  bool obstructed;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!(a.mu == b.mu)) return b.mu < a.mu;
  bool as = a.move.sigma.has_value(), bs = b.move.sigma.has_value();
  if (as != bs) return !as;
  if (a.move.rho.w != b.move.rho.w) return grevlex_less(a.move.rho.w, b.move.rho.w);
  return false;
}

std::optional<Candidate> evaluate(const AnyFamily& fam, const Move& mv,
                                  const LineBundleSpec& spec) {
  try {
    AnyFamily moved = mv.sigma ? apply_subst(fam, *mv.sigma) : fam;
    bool obstructed = false;
    HMKValue v = mu_reduced(moved, mv.rho, spec, &obstructed);
    return Candidate{mv, v, obstructed};
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

GradedSubstitution align_linear(const WeightSystem& ws, const WPoly& ell, int* target) {
  // maps ell to a coordinate: sigma(x_j) = (x_j - sum_{i != j} a_i x_i)/a_j
  int n = ws.n();
  int j = -1;
  Rational aj;
  std::vector<std::pair<int, Rational>> others;
  for (const auto& [m, c] : ell.terms()) {
    int var = -1;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] == 1)
        var = static_cast<int>(i);
    if (j < 0) {
      j = var;
      aj = tconst(c);
    } else {
      others.push_back({var, tconst(c)});
    }
  }
  std::vector<WPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(WPoly::monomial(n, unit_mon(n, i), TPoly(1)));
  WPoly im = WPoly::monomial(n, unit_mon(n, j), TPoly(Rational(1) / aj));
  for (const auto& [i, a] : others) im -= WPoly::monomial(n, unit_mon(n, i), TPoly(a / aj));
  images[static_cast<size_t>(j)] = im;
  *target = j;
  return GradedSubstitution(ws, std::move(images));
}

// Completing the top power of each higher-weight variable in the central
// fiber (z := z - p2/3, w := w - b3/2 and the like) exposes destabilizers
// whose substitutions mix levels; returns identity when already normalized.
GradedSubstitution fiber_normalization(const AnyFamily& fam) {
  const WeightSystem& ws = family_weights(fam);
  int n = ws.n();
  GradedSubstitution total = GradedSubstitution::identity(ws);
  AnyFamily cur = fam;
  for (int pass = 0; pass < 2; ++pass) {
    for (int v = 0; v < n; ++v) {
      int c = ws.weight(v);
      if (c == 1) continue;
      WPoly f0 = family_F(cur).at_t0();
      long deg = *f0.homogeneous_degree(ws);
      if (deg % c != 0) continue;
      int k = static_cast<int>(deg / c);
      if (k < 2) continue;
      Monomial top(static_cast<size_t>(n), 0);
      top[static_cast<size_t>(v)] = k;
      Rational lead = f0.coeff(top).coeff(0);
      if (lead.is_zero()) continue;
      // coefficient form of v^{k-1}
      WPoly p(n);
      for (const auto& [m, cc] : f0.terms()) {
        if (m[static_cast<size_t>(v)] != k - 1) continue;
        Monomial rest = m;
        rest[static_cast<size_t>(v)] = 0;
        p.add_term(rest, cc);
      }
      if (p.is_zero()) continue;
      WPoly shift = p * TPoly(Rational(-1) / (Rational(k) * lead));
      try {
        GradedSubstitution sigma = GradedSubstitution::elementary(ws, v, shift);
        cur = apply_subst(cur, sigma);
        total = compose(sigma, total);
      } catch (const std::invalid_argument&) {
        continue;
      }
    }
  }
  return total;
}

void collect_factor_moves(const AnyFamily& fam, std::vector<Move>& out) {
  const WeightSystem& ws = family_weights(fam);
  int n = ws.n();
  std::vector<std::pair<const WPoly*, const char*>> forms;
  WPoly f0 = family_F(fam).at_t0();
  WPoly h0(n);
  forms.push_back({&f0, "central-fiber factor"});
  if (std::holds_alternative<CIFamily>(fam)) {
    h0 = std::get<CIFamily>(fam).H.at_t0();
    forms.push_back({&h0, "H0 factor"});
  }
  for (const auto& [form, note] : forms) {
    if (form->is_zero()) continue;
    FactorDetectResult r = linear_factor_detect(*form, ws);
    if (r.status != DetectStatus::Found) continue;
    long full = weighted_degree(ws, form->terms().begin()->first);
    if (weighted_degree(ws, r.factor->terms().begin()->first) >= full) continue;
    const WPoly& ell = *r.factor;
    if (ell.term_count() == 1) {
      int var = -1;
      const Monomial& m = ell.terms().begin()->first;
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] == 1) var = static_cast<int>(i);
      if (var >= 0) out.push_back({std::nullopt, unit_rho(n, var), note});
    } else {
      int target = -1;
      GradedSubstitution sigma = align_linear(ws, ell, &target);
      out.push_back({sigma, unit_rho(n, target), note});
    }
  }
}

}  // namespace

std::optional<std::pair<Move, HMKValue>> find_destabilizer(const AnyFamily& fam,
                                                           const LineBundleSpec& spec,
                                                           const SearchBudget& budget) {
  const WeightSystem& ws = family_weights(fam);
  std::optional<Candidate> best;
  auto consider = [&](const Move& mv) {
    auto c = evaluate(fam, mv, spec);
    if (!c || !c->mu.positive()) return;
    if (!best || better(*c, *best)) best = c;
  };
  std::vector<Move> factor_moves;
  collect_factor_moves(fam, factor_moves);
  for (const Move& mv : factor_moves) consider(mv);
  GradedSubstitution norm = fiber_normalization(fam);
  bool has_norm = !norm.is_identity();
  for (const OneParamSubgroup& rho : enumerate_ops(ws, budget.w_max)) {
    consider({std::nullopt, rho, "enumerated"});
    if (has_norm) consider({norm, rho, "fiber-normalized"});
    GradedSubstitution sigma = kempf_hill_climb(fam, rho, budget);
    if (!sigma.is_identity()) consider({sigma, rho, "hill-climb"});
  }
  if (!best) return std::nullopt;
  return std::make_pair(best->move, best->mu);
}

AnyFamily apply_move(const AnyFamily& fam, const Move& mv, bool* obstructed) {
  AnyFamily moved = mv.sigma ? apply_subst(fam, *mv.sigma) : fam;
  if (obstructed) *obstructed = false;
  if (std::holds_alternative<HypersurfaceFamily>(moved))
    return transform_hyp(std::get<HypersurfaceFamily>(moved), mv.rho);
  return transform_ci(std::get<CIFamily>(moved), mv.rho, obstructed);
}

std::uint64_t family_hash(const AnyFamily& fam) {
  const WeightSystem& ws = family_weights(fam);
  std::vector<std::string> names;
  for (int i = 0; i < ws.n(); ++i) names.push_back("x" + std::to_string(i + 1));
  std::ostringstream os;
  for (int c : ws.weights()) os << c << ",";
  os << "|" << print_wpoly(family_F(fam), names);
  if (std::holds_alternative<CIFamily>(fam))
    os << "|" << print_wpoly(std::get<CIFamily>(fam).H, names);
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : os.str()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

std::pair<AnyFamily, Certificate> standardize(const AnyFamily& fam, const LineBundleSpec& spec,
                                              const SearchBudget& budget,
                                              const std::vector<std::string>* names) {
  std::vector<std::string> local_names;
  if (!names) {
    for (int i = 0; i < family_weights(fam).n(); ++i)
      local_names.push_back("x" + std::to_string(i + 1));
    names = &local_names;
  }
  AnyFamily cur = fam;
  Certificate cert;
  cert.budget = budget;
  cert.cumulative_mu = HMKValue{Rational(0), std::nullopt};
  for (int step = 0; step < budget.max_steps; ++step) {
    auto found = find_destabilizer(cur, spec, budget);
    if (!found) {
      cert.status = CertStatus::SemistableWithinBudget;
      return {cur, cert};
    }
    StepLog log;
    log.hash_before = family_hash(cur);
    log.rho = found->first.rho.w;
    log.mu = found->second;
    log.note = found->first.note;
    if (found->first.sigma) {
      std::ostringstream os;
      for (int i = 0; i < family_weights(cur).n(); ++i) {
        if (i) os << "; ";
        os << (*names)[static_cast<size_t>(i)] << " -> "
           << print_wpoly(found->first.sigma->image(i), *names);
      }
      log.substitution = os.str();
    }
    bool obstructed = false;
    try {
      cur = apply_move(cur, found->first, &obstructed);
    } catch (const std::invalid_argument& e) {
      cert.warnings.push_back(std::string("move could not be applied: ") + e.what());
      cert.status = CertStatus::BudgetExhausted;
      return {cur, cert};
    }
    log.obstructed_reduction = obstructed;
    if (obstructed) cert.warnings.push_back("obstructed reduction at step " + std::to_string(step));
    log.hash_after = family_hash(cur);
    cert.cumulative_mu.first += log.mu.first;
    if (log.mu.second) {
      if (!cert.cumulative_mu.second) cert.cumulative_mu.second = Rational(0);
      *cert.cumulative_mu.second += *log.mu.second;
    }
    cert.steps.push_back(std::move(log));
  }
  cert.status = CertStatus::BudgetExhausted;
  return {cur, cert};
}

std::optional<std::string> integrality_witness(const AnyFamily& fam,
                                               const std::vector<std::string>& names) {
  const WeightSystem& ws = family_weights(fam);
  int n = ws.n();
  auto proper_factor = [&](const WPoly& form, long degree) -> std::optional<WPoly> {
    FactorDetectResult r = linear_factor_detect(form, ws);
    if (r.status != DetectStatus::Found) return std::nullopt;
    if (weighted_degree(ws, r.factor->terms().begin()->first) >= degree) return std::nullopt;
    return r.factor;
  };
  WPoly f0 = family_F(fam).at_t0();
  if (std::holds_alternative<HypersurfaceFamily>(fam)) {
    auto f = proper_factor(f0, std::get<HypersurfaceFamily>(fam).degree);
    if (f) return "central fiber divisible by " + print_wpoly(*f, names);
    return std::nullopt;
  }
  const auto& ci = std::get<CIFamily>(fam);
  WPoly h0 = ci.H.at_t0();
  auto fh = proper_factor(h0, ci.deg_H);
  if (fh) return "H0 divisible by " + print_wpoly(*fh, names);
  // coordinate component: F0 in (x_j, H0)
  for (int j = 0; j < n; ++j) {
    WPoly fr = f0.restrict_zero({j});
    WPoly hr = h0.restrict_zero({j});
    if (fr.is_zero()) return "central fiber contains {" + names[static_cast<size_t>(j)] + " = 0}";
    if (hr.is_zero()) continue;
    if (graded_multiple(fr, hr, ws, ci.deg_F, ci.deg_H))
      return "central fiber contains {" + names[static_cast<size_t>(j)] + " = 0} on {H0 = 0}";
  }
  return std::nullopt;
}

}  // namespace dpstab
