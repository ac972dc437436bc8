#pragma once

#include "dpstab/weights.hpp"

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <vector>

namespace dpstab {

using Monomial = std::vector<int>;  // exponent vector, length n

inline int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

inline long weighted_degree(const WeightSystem& ws, const Monomial& m) {
  long d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(ws.weight(static_cast<int>(i))) * m[i];
  return d;
}

inline long rho_weight(const std::vector<int>& w, const Monomial& m) {
  long r = 0;
  for (size_t i = 0; i < m.size(); ++i) r += static_cast<long>(w[i]) * m[i];
  return r;
}

// Graded reverse lexicographic: higher total degree wins; at equal degree,
// a > b iff the last nonzero entry of a-b is negative.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? false : true;  // a<b iff last nonzero of a-b positive
  }
  return false;
}

struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// All monomials of weighted degree r, in descending grevlex order.
inline std::vector<Monomial> enumerate_monomials(const WeightSystem& ws, long r) {
  std::vector<Monomial> out;
  if (r < 0) return out;
  Monomial cur(static_cast<size_t>(ws.n()), 0);
  auto rec = [&](auto&& self, int i, long rem) -> void {
    if (i == ws.n() - 1) {
      if (rem % ws.weight(i) == 0) {
        cur[static_cast<size_t>(i)] = static_cast<int>(rem / ws.weight(i));
        out.push_back(cur);
        cur[static_cast<size_t>(i)] = 0;
      }
      return;
    }
    for (long e = 0; e * ws.weight(i) <= rem; ++e) {
      cur[static_cast<size_t>(i)] = static_cast<int>(e);
      self(self, i + 1, rem - e * ws.weight(i));
    }
    cur[static_cast<size_t>(i)] = 0;
  };
  rec(rec, 0, r);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_less(b, a);
  });
  return out;
}

}  // namespace dpstab
