// Internal univariate utilities over Q: gcd, rational roots, divisor search.
#pragma once

#include "dpstab/rational.hpp"

#include <optional>
#include <vector>

namespace dpstab {
namespace detail {

using UPoly = std::vector<Rational>;  // c[k] = coefficient of u^k; trimmed

inline void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  utrim(r);
  return r;
}

inline UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  utrim(a);
  return a;
}

// remainder of a mod b
inline UPoly urem(UPoly a, const UPoly& b) {
  utrim(a);
  while (!a.empty() && a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    utrim(a);
  }
  return a;
}

inline std::optional<UPoly> udiv_exact(const UPoly& a, const UPoly& b) {
  if (b.empty()) return std::nullopt;
  UPoly rem = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  utrim(rem);
  while (!rem.empty() && rem.size() >= b.size()) {
    Rational f = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    utrim(rem);
  }
  if (!rem.empty()) return std::nullopt;
  utrim(q);
  return q;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;  // monic
  }
  return a;
}

// All positive divisors of |z|, or nullopt if factoring bails out.
std::optional<std::vector<mpz_class>> divisors(mpz_class z);

// Rational roots of p (exact, possibly empty). nullopt = inconclusive
// (coefficient factorization bailed out).
std::optional<std::vector<Rational>> rational_roots(const UPoly& p);

}  // namespace detail
}  // namespace dpstab
