#include "dpstab/hmk.hpp"

#include "dpstab/linalg.hpp"
#include "dpstab/pic.hpp"

#include <map>
#include <stdexcept>

namespace dpstab {

long mult(const WPoly& f, const OneParamSubgroup& rho) {
  if (f.is_zero()) throw std::domain_error("mult: zero polynomial");
  bool first = true;
  long best = 0;
  for (const auto& [m, c] : f.terms()) {
    long lvl = c.val() + rho_weight(rho.w, m);
    if (first || lvl < best) best = lvl;
    first = false;
  }
  return best;
}

WPoly rho_act(const WPoly& f, const OneParamSubgroup& rho) {
  WPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, c.shifted(static_cast<int>(rho_weight(rho.w, m))));
  return r;
}

WPoly leading_form(const WPoly& f, const OneParamSubgroup& rho) {
  long m0 = mult(f, rho);
  WPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    long e = m0 - rho_weight(rho.w, m);
    if (e < 0) continue;
    const Rational& cc = c.coeff(static_cast<int>(e));
    if (!cc.is_zero()) r.add_term(m, TPoly(cc));
  }
  return r;
}

HypersurfaceFamily::HypersurfaceFamily(const WeightSystem& ws_, int degree_, WPoly f)
    : ws(ws_), degree(degree_), F(std::move(f)) {
  if (F.is_zero()) throw std::invalid_argument("HypersurfaceFamily: zero equation");
  F.check_homogeneous(ws, degree);
  if (F.t_valuation() != 0) throw std::invalid_argument("HypersurfaceFamily: t-valuation must be 0");
}

std::optional<WPoly> graded_multiple(const WPoly& f, const WPoly& g, const WeightSystem& ws,
                                     long deg_f, long deg_g) {
  if (g.is_zero()) throw std::invalid_argument("graded_multiple: zero divisor");
  if (f.is_zero()) return WPoly(f.nvars());
  if (g.term_count() == 1) {
    const auto& [gm, gc] = *g.terms().begin();
    if (gc.degree() > 0 || gc.val() != 0)
      throw std::invalid_argument("graded_multiple: expects t-free forms");
    WPoly q(f.nvars());
    for (const auto& [m, c] : f.terms()) {
      if (c.degree() > 0 || c.val() != 0)
        throw std::invalid_argument("graded_multiple: expects t-free forms");
      if (!monomial_divides(gm, m)) return std::nullopt;
      q.add_term(monomial_div(m, gm), TPoly(c.coeff(0) / gc.coeff(0)));
    }
    return q;
  }
  // a monomial of f not above any monomial of g cannot be matched
  for (const auto& [m, c] : f.terms()) {
    bool covered = false;
    for (const auto& [gm, gc] : g.terms())
      if (monomial_divides(gm, m)) {
        covered = true;
        break;
      }
    if (!covered) return std::nullopt;
  }
  std::vector<Monomial> qmons = enumerate_monomials(ws, deg_f - deg_g);
  if (qmons.empty()) return std::nullopt;
  // row index: monomials of degree deg_f appearing in f or in x^a * g
  std::map<Monomial, int> rows;
  auto row_of = [&](const Monomial& m) {
    auto [it, fresh] = rows.emplace(m, static_cast<int>(rows.size()));
    return it->second;
  };
  for (const auto& [m, c] : f.terms()) row_of(m);
  std::vector<std::vector<std::pair<int, Rational>>> cols(qmons.size());
  for (size_t j = 0; j < qmons.size(); ++j) {
    for (const auto& [m, c] : g.terms()) {
      if (c.degree() > 0 || c.val() != 0)
        throw std::invalid_argument("graded_multiple: expects t-free forms");
      cols[j].push_back({row_of(monomial_mul(qmons[j], m)), c.coeff(0)});
    }
  }
  MatQ A = MatQ::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(qmons.size()));
  VecQ b = VecQ::Zero(static_cast<Eigen::Index>(rows.size()));
  for (size_t j = 0; j < qmons.size(); ++j)
    for (const auto& [i, v] : cols[j]) A(i, static_cast<Eigen::Index>(j)) += v;
  for (const auto& [m, c] : f.terms()) {
    if (c.degree() > 0 || c.val() != 0)
      throw std::invalid_argument("graded_multiple: expects t-free forms");
    b(rows.at(m)) = c.coeff(0);
  }
  auto x = solve_exact(A, b);
  if (!x) return std::nullopt;
  WPoly q(f.nvars());
  for (size_t j = 0; j < qmons.size(); ++j)
    if (!(*x)(static_cast<Eigen::Index>(j)).is_zero())
      q.add_term(qmons[j], TPoly((*x)(static_cast<Eigen::Index>(j))));
  return q;
}

CIFamily::CIFamily(const WeightSystem& ws_, int dF, int dH, WPoly f, WPoly h)
    : ws(ws_), deg_F(dF), deg_H(dH), F(std::move(f)), H(std::move(h)) {
  if (F.is_zero() || H.is_zero()) throw std::invalid_argument("CIFamily: zero equation");
  F.check_homogeneous(ws, deg_F);
  H.check_homogeneous(ws, deg_H);
  if (F.t_valuation() != 0) throw std::invalid_argument("CIFamily: t-valuation of F must be 0");
  if (H.t_valuation() != 0) throw std::invalid_argument("CIFamily: t-valuation of H must be 0");
  if (graded_multiple(F.at_t0(), H.at_t0(), ws, deg_F, deg_H))
    throw std::invalid_argument("CIFamily: central fiber of F is a multiple of H");
}

const WeightSystem& family_weights(const AnyFamily& fam) {
  return std::visit([](const auto& f) -> const WeightSystem& { return f.ws; }, fam);
}

const WPoly& family_F(const AnyFamily& fam) {
  return std::visit([](const auto& f) -> const WPoly& { return f.F; }, fam);
}

HypersurfaceFamily transform_hyp(const HypersurfaceFamily& fam, const OneParamSubgroup& rho) {
  long m = mult(fam.F, rho);
  return HypersurfaceFamily(fam.ws, fam.degree, rho_act(fam.F, rho).t_shifted(static_cast<int>(-m)));
}

ReduceResult reduce_ci(const CIFamily& fam, const OneParamSubgroup& rho) {
  CIFamily cur = fam;
  int steps = 0;
  for (;;) {
    if (steps > 500) throw std::runtime_error("reduce_ci: did not stabilize");
    long mF = mult(cur.F, rho);
    long mH = mult(cur.H, rho);
    WPoly lf = leading_form(cur.F, rho);
    WPoly lh = leading_form(cur.H, rho);
    auto q = graded_multiple(lf, lh, cur.ws, cur.deg_F, cur.deg_H);
    if (!q || q->is_zero()) return {cur, false, steps};
    WPoly corr(cur.F.nvars());
    for (const auto& [a, c] : q->terms()) {
      long e = mF - mH - rho_weight(rho.w, a);
      if (e < 0) return {cur, true, steps};
      corr.add_term(a, c.shifted(static_cast<int>(e)));
    }
    WPoly next = cur.F - corr * cur.H;
    if (next.is_zero() || mult(next, rho) <= mF)
      throw std::logic_error("reduce_ci: leading slice did not cancel");
    cur = CIFamily(cur.ws, cur.deg_F, cur.deg_H, std::move(next), cur.H);
    ++steps;
  }
}

CIFamily transform_ci(const CIFamily& fam, const OneParamSubgroup& rho, bool* obstructed) {
  ReduceResult red = reduce_ci(fam, rho);
  if (obstructed) *obstructed = red.obstructed;
  long mF = mult(red.fam.F, rho);
  long mH = mult(red.fam.H, rho);
  return CIFamily(red.fam.ws, red.fam.deg_F, red.fam.deg_H,
                  rho_act(red.fam.F, rho).t_shifted(static_cast<int>(-mF)),
                  rho_act(red.fam.H, rho).t_shifted(static_cast<int>(-mH)));
}

std::optional<SpaceId> identify_space(const WeightSystem& ws, int deg_f,
                                      std::optional<int> deg_h) {
  const auto& c = ws.weights();
  if (!deg_h) {
    if (c == std::vector<int>{2, 1, 1, 1} && deg_f == 4) return SpaceId::Quartic2111;
    if (c == std::vector<int>{3, 2, 1, 1} && deg_f == 6) return SpaceId::Sextic3211;
    return std::nullopt;
  }
  if (c == std::vector<int>{2, 2, 1, 1, 1} && deg_f == 4 && *deg_h == 2) return SpaceId::Dp2CI;
  if (c == std::vector<int>{3, 3, 2, 1, 1} && deg_f == 6 && *deg_h == 3) return SpaceId::Dp1CI;
  return std::nullopt;
}

WeightSystem space_weights(SpaceId id) {
  switch (id) {
    case SpaceId::Quartic2111: return WeightSystem({2, 1, 1, 1});
    case SpaceId::Sextic3211: return WeightSystem({3, 2, 1, 1});
    case SpaceId::Dp2CI: return WeightSystem({2, 2, 1, 1, 1});
    case SpaceId::Dp1CI: return WeightSystem({3, 3, 2, 1, 1});
  }
  throw std::logic_error("space_weights: bad id");
}

bool space_is_ci(SpaceId id) { return id == SpaceId::Dp2CI || id == SpaceId::Dp1CI; }

Rational MuFunctional::eval(long mF, long mH, const OneParamSubgroup& rho) const {
  Rational v = aF * Rational(mF) + aH * Rational(mH);
  for (size_t i = 0; i < wc.size(); ++i) v -= wc[i] * Rational(rho.w[i]);
  return v;
}

MuFunctional& MuFunctional::operator+=(const MuFunctional& o) {
  aF += o.aF;
  aH += o.aH;
  if (wc.size() < o.wc.size()) wc.resize(o.wc.size(), Rational(0));
  for (size_t i = 0; i < o.wc.size(); ++i) wc[i] += o.wc[i];
  return *this;
}

MuFunctional& MuFunctional::operator*=(const Rational& c) {
  aF *= c;
  aH *= c;
  for (auto& x : wc) x *= c;
  return *this;
}

MuFunctional operator-(MuFunctional a, const MuFunctional& b) {
  MuFunctional nb = b;
  nb *= Rational(-1);
  return a += nb;
}

MuFunctional GenericCoeffs::functional(const WeightSystem& ws) const {
  int s = ws.s();
  if (static_cast<int>(a.size()) != s)
    throw std::invalid_argument("GenericCoeffs: expected one coefficient per weight > 1");
  MuFunctional f;
  f.aF = a0;
  f.aH = Rational(0);
  f.wc.resize(static_cast<size_t>(ws.n()));
  for (int i = 0; i < ws.n(); ++i)
    f.wc[static_cast<size_t>(i)] = i < s ? a[static_cast<size_t>(i)] : a_last;
  return f;
}

LineBundleSpec LineBundleSpec::generic(const WeightSystem& ws, const GenericCoeffs& gc) {
  return LineBundleSpec{"generic", gc.functional(ws), std::nullopt};
}

namespace {

// Lift a hypersurface stability condition on the sub-space P(c_1,..,c_m) to
// the CI space with the top weight doubled: the H-multiplicity and both
// top-weight coordinates inherit the sub-space's top coefficient.
MuFunctional lift_to_ci(const GenericCoeffs& sub, const WeightSystem& sub_ws) {
  MuFunctional f;
  MuFunctional base = sub.functional(sub_ws);
  f.aF = sub.a0;
  f.aH = base.wc[0];
  f.wc.push_back(base.wc[0]);
  for (const Rational& c : base.wc) f.wc.push_back(c);
  return f;
}

}  // namespace

LineBundleSpec preset_bundle(SpaceId space, const std::string& name) {
  switch (space) {
    case SpaceId::Quartic2111: {
      WeightSystem ws({2, 1, 1, 1});
      auto dc = pic::hmk_delta_coeffs(ws, 4);
      if (name == "delta0") return {"delta0", dc.delta0.functional(ws), std::nullopt};
      if (name == "delta1") return {"delta1", dc.delta[0].functional(ws), std::nullopt};
      if (name == "bal") {
        MuFunctional f = dc.delta0.functional(ws) + dc.delta[0].functional(ws) * Rational(5);
        f *= Rational(1, 45);
        return {"bal", f, std::nullopt};
      }
      break;
    }
    case SpaceId::Sextic3211: {
      WeightSystem ws({3, 2, 1, 1});
      auto dc = pic::hmk_delta_coeffs(ws, 6);
      MuFunctional d0 = dc.delta0.functional(ws);
      MuFunctional d1 = dc.delta[0].functional(ws);
      MuFunctional d2 = dc.delta[1].functional(ws);
      if (name == "delta0") return {"delta0", d0, std::nullopt};
      if (name == "delta1") return {"delta1", d1, std::nullopt};
      if (name == "delta2") return {"delta2", d2, std::nullopt};
      if (name == "bal") {
        MuFunctional f = d0 + d1 * Rational(14) + d2 * Rational(8);
        f *= Rational(1, 70);
        return {"bal", f, std::nullopt};
      }
      if (name == "gor") return {"gor", d1 + d2, d0};
      break;
    }
    case SpaceId::Dp2CI: {
      WeightSystem sub({2, 1, 1, 1});
      auto dc = pic::hmk_delta_coeffs(sub, 4);
      MuFunctional d0 = lift_to_ci(dc.delta0, sub);
      MuFunctional d1 = lift_to_ci(dc.delta[0], sub);
      if (name == "delta0") return {"delta0", d0, std::nullopt};
      if (name == "delta1") return {"delta1", d1, std::nullopt};
      MuFunctional bal = d0 + d1 * Rational(5);
      bal *= Rational(1, 45);
      if (name == "bal") return {"bal", bal, std::nullopt};
      if (name == "ter") return {"ter", bal, d1};
      break;
    }
    case SpaceId::Dp1CI: {
      WeightSystem sub({3, 2, 1, 1});
      auto dc = pic::hmk_delta_coeffs(sub, 6);
      MuFunctional d0 = lift_to_ci(dc.delta0, sub);
      MuFunctional d1 = lift_to_ci(dc.delta[0], sub);
      MuFunctional d2 = lift_to_ci(dc.delta[1], sub);
      if (name == "delta0") return {"delta0", d0, std::nullopt};
      if (name == "delta1") return {"delta1", d1, std::nullopt};
      if (name == "delta2") return {"delta2", d2, std::nullopt};
      MuFunctional bal = d0 + d1 * Rational(14) + d2 * Rational(8);
      bal *= Rational(1, 70);
      if (name == "bal") return {"bal", bal, std::nullopt};
      if (name == "ter") return {"ter", bal, d1 - d2};
      break;
    }
  }
  throw std::invalid_argument("preset_bundle: no preset '" + name + "' on this space");
}

HMKValue mu(const AnyFamily& fam, const OneParamSubgroup& rho, const LineBundleSpec& spec) {
  long mF, mH = 0;
  if (std::holds_alternative<HypersurfaceFamily>(fam)) {
    const auto& h = std::get<HypersurfaceFamily>(fam);
    if (!spec.primary.aH.is_zero())
      throw std::invalid_argument("mu: CI bundle applied to a hypersurface family");
    mF = mult(h.F, rho);
  } else {
    const auto& ci = std::get<CIFamily>(fam);
    mF = mult(ci.F, rho);
    mH = mult(ci.H, rho);
  }
  HMKValue v;
  v.first = spec.primary.eval(mF, mH, rho);
  if (spec.secondary) v.second = spec.secondary->eval(mF, mH, rho);
  return v;
}

HMKValue mu_reduced(const AnyFamily& fam, const OneParamSubgroup& rho, const LineBundleSpec& spec,
                    bool* obstructed) {
  if (obstructed) *obstructed = false;
  if (std::holds_alternative<CIFamily>(fam)) {
    ReduceResult red = reduce_ci(std::get<CIFamily>(fam), rho);
    if (obstructed) *obstructed = red.obstructed;
    return mu(AnyFamily(red.fam), rho, spec);
  }
  return mu(fam, rho, spec);
}

}  // namespace dpstab
