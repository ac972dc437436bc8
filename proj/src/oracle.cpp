#include "dpstab/linalg.hpp"
#include "dpstab/pic.hpp"

#include <stdexcept>

namespace dpstab {

// Fraction-free Bareiss over Q[t].
TPoly tpoly_det(std::vector<std::vector<TPoly>> m) {
  size_t n = m.size();
  if (n == 0) return TPoly(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("tpoly_det: not square");
  TPoly prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return TPoly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(prev);
      m[i][k] = TPoly();
    }
    prev = m[k][k];
  }
  TPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

namespace pic {
namespace {

// Coefficient of x^k y^(deg-k) in a binary form.
TPoly binary_coeff(const WPoly& f, int deg, int k) {
  Monomial m{k, deg - k};
  return f.coeff(m);
}

long sylvester_val(const WPoly& gx, const WPoly& gy, int e) {
  // resultant of two binary forms of degree e, as univariates in x
  size_t n = 2 * static_cast<size_t>(e);
  std::vector<std::vector<TPoly>> m(n, std::vector<TPoly>(n));
  for (int r = 0; r < e; ++r) {
    for (int k = 0; k <= e; ++k) {
      m[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = binary_coeff(gx, e, e - k);
      m[static_cast<size_t>(e + r)][static_cast<size_t>(r + k)] = binary_coeff(gy, e, e - k);
    }
  }
  TPoly res = tpoly_det(std::move(m));
  if (res.is_zero())
    throw std::domain_error("discriminant oracle: discriminant vanishes identically");
  return res.val();
}

long macaulay_val(const std::vector<WPoly>& g, const WeightSystem& ws, int e) {
  long D = 3L * (e - 1) + 1;
  std::vector<Monomial> cols = enumerate_monomials(ws, D);
  size_t n = cols.size();
  std::map<Monomial, size_t> col_of;
  for (size_t j = 0; j < n; ++j) col_of[cols[j]] = j;

  auto owner = [&](const Monomial& m) {
    for (int i = 0; i < 3; ++i)
      if (m[static_cast<size_t>(i)] >= e) return i;
    return -1;
  };
  auto reduced = [&](const Monomial& m) {
    int cnt = 0;
    for (int i = 0; i < 3; ++i)
      if (m[static_cast<size_t>(i)] >= e) ++cnt;
    return cnt == 1;
  };

  std::vector<std::vector<TPoly>> M(n, std::vector<TPoly>(n));
  for (size_t r = 0; r < n; ++r) {
    int i = owner(cols[r]);
    if (i < 0) throw std::logic_error("macaulay: monomial with no owner");
    Monomial q = cols[r];
    q[static_cast<size_t>(i)] -= e;
    for (const auto& [mm, c] : g[static_cast<size_t>(i)].terms())
      M[r][col_of.at(monomial_mul(q, mm))] += c;
  }
  std::vector<size_t> extra;  // non-reduced indices
  for (size_t j = 0; j < n; ++j)
    if (!reduced(cols[j])) extra.push_back(j);
  std::vector<std::vector<TPoly>> Mt(extra.size(), std::vector<TPoly>(extra.size()));
  for (size_t a = 0; a < extra.size(); ++a)
    for (size_t b = 0; b < extra.size(); ++b) Mt[a][b] = M[extra[a]][extra[b]];

  TPoly det_m = tpoly_det(std::move(M));
  if (det_m.is_zero())
    throw std::domain_error("discriminant oracle: discriminant vanishes identically");
  TPoly det_mt = tpoly_det(std::move(Mt));
  if (det_mt.is_zero())
    throw std::runtime_error("discriminant oracle: degenerate Macaulay minor");
  return det_m.val() - det_mt.val();
}

}  // namespace

long discriminant_valuation_oracle(const HypersurfaceFamily& fam) {
  int n = fam.ws.n();
  for (int c : fam.ws.weights())
    if (c != 1) throw std::invalid_argument("discriminant oracle: equal weights only");
  if (n > 3 || fam.degree > 4)
    throw std::invalid_argument("discriminant oracle: n <= 3 and d <= 4 only");
  int e = fam.degree - 1;
  std::vector<WPoly> g;
  for (int i = 0; i < n; ++i) g.push_back(fam.F.partial_derivative(i));
  for (const WPoly& gi : g)
    if (gi.is_zero()) throw std::domain_error("discriminant oracle: discriminant vanishes identically");
  if (n == 2) return sylvester_val(g[0], g[1], e);
  return macaulay_val(g, fam.ws, e);
}

}  // namespace pic
}  // namespace dpstab
