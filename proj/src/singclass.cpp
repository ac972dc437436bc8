#include "dpstab/singclass.hpp"

#include "dpstab/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dpstab {

std::string sing_class_name(SingClass c) {
  switch (c) {
    case SingClass::Smooth: return "smooth";
    case SingClass::CA: return "cA";
    case SingClass::CD: return "cD";
    case SingClass::CE: return "cE";
    case SingClass::CE6: return "cE6";
    case SingClass::CE7: return "cE7";
    case SingClass::CE8: return "cE8";
    case SingClass::QuotientTerminal: return "quotient-terminal";
    case SingClass::NonIsolated: return "non-isolated";
    case SingClass::NotCDV: return "not-cDV";
    case SingClass::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

Monomial unit_mon(int n, int i) {
  Monomial m(static_cast<size_t>(n), 0);
  m[static_cast<size_t>(i)] = 1;
  return m;
}

Monomial pair_mon(int n, int i, int j) {
  Monomial m(static_cast<size_t>(n), 0);
  m[static_cast<size_t>(i)] += 1;
  m[static_cast<size_t>(j)] += 1;
  return m;
}

// Series from a polynomial with the chart variable set to 1; t becomes the
// last local variable.
Series chart_series(const WPoly& f, int chart, int trunc) {
  int n = f.nvars();
  Series s(n, trunc);  // vars: all but chart (in order), then t
  for (const auto& [m, c] : f.terms()) {
    Monomial local(static_cast<size_t>(n), 0);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      if (i == chart) continue;
      local[static_cast<size_t>(k++)] = m[static_cast<size_t>(i)];
    }
    for (int e = 0; e <= c.degree(); ++e) {
      if (c.coeff(e).is_zero()) continue;
      Monomial full = local;
      full[static_cast<size_t>(n - 1)] = e;
      s.add_term(full, c.coeff(e));
    }
  }
  return s;
}

Series drop_variable(const Series& s, int var) {
  int n = s.nvars();
  Series r(n - 1, s.trunc());
  for (const auto& [m, c] : s.terms()) {
    if (m[static_cast<size_t>(var)] != 0)
      throw std::logic_error("drop_variable: variable still present");
    Monomial q;
    for (int i = 0; i < n; ++i)
      if (i != var) q.push_back(m[static_cast<size_t>(i)]);
    r.add_term(q, c);
  }
  return r;
}

}  // namespace

LocalModel local_model(const AnyFamily& fam, const std::vector<Rational>& point, int chart,
                       int trunc) {
  const WeightSystem& ws = family_weights(fam);
  int n = ws.n();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("local_model: point arity mismatch");
  if (point[static_cast<size_t>(chart)].is_zero())
    throw std::invalid_argument("local_model: chart coordinate vanishes at the point");

  // rescale so the chart coordinate equals 1
  std::vector<Rational> p(point);
  {
    Rational target = Rational(1) / point[static_cast<size_t>(chart)];
    Rational lambda;
    if (!target.nth_root(static_cast<unsigned>(ws.weight(chart)), lambda))
      throw std::invalid_argument("local_model: point cannot be normalized over Q");
    for (int i = 0; i < n; ++i) {
      Rational f(1);
      for (int k = 0; k < ws.weight(i); ++k) f *= lambda;
      p[static_cast<size_t>(i)] *= f;
    }
  }

  if (!family_F(fam).evaluate(p, Rational(0)).is_zero())
    throw std::invalid_argument("local_model: point is not on the central fiber");
  if (std::holds_alternative<CIFamily>(fam) &&
      !std::get<CIFamily>(fam).H.evaluate(p, Rational(0)).is_zero())
    throw std::invalid_argument("local_model: point is not on the central fiber");

  bool origin = true;
  for (int i = 0; i < n; ++i)
    if (i != chart && !p[static_cast<size_t>(i)].is_zero()) origin = false;

  // local variable layout: ambient vars minus chart, then t
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 0; i < n; ++i) {
    if (i == chart) continue;
    names.push_back("u" + std::to_string(i));
    weights.push_back(ws.weight(i));
  }
  names.push_back("t");
  weights.push_back(0);

  auto build = [&](const WPoly& eq) {
    Series s = chart_series(eq, chart, trunc);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      if (i == chart) continue;
      if (!p[static_cast<size_t>(i)].is_zero()) {
        Series shifted = Series::variable(n, trunc, k) +
                         Series::constant(n, trunc, p[static_cast<size_t>(i)]);
        s = s.substitute(k, shifted);
      }
      ++k;
    }
    return s;
  };

  LocalModel lm;
  int cw = ws.weight(chart);
  lm.k = (origin && (cw == 2 || cw == 3)) ? cw : 1;

  Series model;
  if (std::holds_alternative<HypersurfaceFamily>(fam)) {
    model = build(std::get<HypersurfaceFamily>(fam).F);
    lm.var_names = names;
  } else {
    const auto& ci = std::get<CIFamily>(fam);
    Series sF = build(ci.F), sH = build(ci.H);
    int nv = n;  // local variable count including t
    int elim = -1;
    for (const Series* eq : {&sH, &sF}) {
      for (int v = 0; v < nv; ++v) {
        if (eq->coeff(unit_mon(nv, v)).is_zero()) continue;
        if (!eq->coeff(Monomial(static_cast<size_t>(nv), 0)).is_zero()) continue;
        auto sol = Series::solve_for(*eq, v);
        if (!sol) continue;
        elim = v;
        const Series& other = (eq == &sH) ? sF : sH;
        model = other.substitute(v, *sol);
        break;
      }
      if (elim >= 0) break;
    }
    if (elim < 0) throw std::invalid_argument("local_model: no quasi-smooth direction");
    model = drop_variable(model, elim);
    std::vector<std::string> kept_names;
    std::vector<int> kept_weights;
    for (int i = 0; i < nv; ++i) {
      if (i == elim) continue;
      kept_names.push_back(names[static_cast<size_t>(i)]);
      kept_weights.push_back(weights[static_cast<size_t>(i)]);
    }
    names = std::move(kept_names);
    weights = std::move(kept_weights);
    lm.var_names = names;
  }
  lm.mu_weights.clear();
  for (size_t i = 0; i < lm.var_names.size(); ++i)
    lm.mu_weights.push_back(lm.k > 1 ? weights[i] % lm.k : 0);
  if (!model.coeff(Monomial(static_cast<size_t>(model.nvars()), 0)).is_zero())
    throw std::invalid_argument("local_model: nonzero constant term");
  lm.f = model;
  return lm;
}

int quadratic_rank(const LocalModel& lm) {
  int n = lm.f.nvars();
  MatQ q = MatQ::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Monomial mii(static_cast<size_t>(n), 0);
    mii[static_cast<size_t>(i)] = 2;
    q(i, i) = lm.f.coeff(mii);
    for (int j = i + 1; j < n; ++j) {
      Rational half = lm.f.coeff(pair_mon(n, i, j)) * Rational(1, 2);
      q(i, j) = half;
      q(j, i) = half;
    }
  }
  return rank_exact(q);
}

CubicShape binary_cubic_shape(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d) {
  if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero())
    throw std::invalid_argument("binary_cubic_shape: zero cubic");
  Rational disc = Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c -
                  Rational(4) * a * c * c * c - Rational(27) * a * a * d * d;
  if (!disc.is_zero()) return CubicShape::ThreeDistinct;
  Rational h0 = Rational(3) * a * c - b * b;
  Rational h1 = Rational(9) * a * d - b * c;
  Rational h2 = Rational(3) * b * d - c * c;
  if (h0.is_zero() && h1.is_zero() && h2.is_zero()) return CubicShape::Cube;
  return CubicShape::TwoDistinct;
}

namespace {

// symmetric 2-jet matrix
MatQ jet2_matrix(const Series& f) {
  int n = f.nvars();
  MatQ q = MatQ::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Monomial mii(static_cast<size_t>(n), 0);
    mii[static_cast<size_t>(i)] = 2;
    q(i, i) = f.coeff(mii);
    for (int j = i + 1; j < n; ++j) {
      Rational half = f.coeff(pair_mon(n, i, j)) * Rational(1, 2);
      q(i, j) = half;
      q(j, i) = half;
    }
  }
  return q;
}

// substitution var := var + delta (delta a series without the variable's own
// linear term), iterated until no term `var * (order >= 2, var-free)` remains
Series complete_square(Series f, int var, const Rational& c2) {
  int n = f.nvars();
  for (int guard = 0; guard < f.trunc() + 4; ++guard) {
    Series mixed(n, f.trunc());
    for (const auto& [m, co] : f.terms()) {
      if (m[static_cast<size_t>(var)] != 1) continue;
      Monomial rest = m;
      rest[static_cast<size_t>(var)] = 0;
      if (total_degree(rest) < 2) continue;
      mixed.add_term(rest, co);
    }
    if (mixed.is_zero()) break;
    mixed *= Rational(-1) / (Rational(2) * c2);
    Series repl = Series::variable(n, f.trunc(), var) + mixed;
    f = f.substitute(var, repl);
  }
  return f;
}

Series strip_variable_terms(const Series& f, int var) {
  Series r(f.nvars(), f.trunc());
  for (const auto& [m, c] : f.terms())
    if (m[static_cast<size_t>(var)] == 0) r.add_term(m, c);
  return r;
}

// rank-1 normalization: returns the pivot variable index after a linear
// change making q2 = c * (pivot)^2, applied to f in place
std::optional<int> normalize_rank_one(Series& f, Rational* c_out,
                                      const std::vector<int>* allowed = nullptr) {
  int n = f.nvars();
  MatQ q = jet2_matrix(f);
  int pivot = -1;
  for (int i = 0; i < n && pivot < 0; ++i) {
    if (allowed && std::find(allowed->begin(), allowed->end(), i) == allowed->end()) continue;
    if (!q(i, i).is_zero()) pivot = i;
  }
  if (pivot < 0) return std::nullopt;
  // x_pivot := x_pivot - sum_j (q_pj / q_pp) x_j kills the mixed row
  std::vector<std::vector<Rational>> change(static_cast<size_t>(n),
                                            std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) change[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
  for (int j = 0; j < n; ++j) {
    if (j == pivot) continue;
    change[static_cast<size_t>(pivot)][static_cast<size_t>(j)] = -q(pivot, j) / q(pivot, pivot);
  }
  f = f.linear_change(change);
  *c_out = q(pivot, pivot);
  return pivot;
}

struct CubeData {
  Rational c;
  std::vector<Rational> ell;  // coefficients over the complement variables
};

// is the cubic form (in the variables `vars` of f) a cube of a linear form?
std::optional<CubeData> cube_form(const Series& cubic, const std::vector<int>& vars) {
  int n = cubic.nvars();
  int lead = -1;
  Rational c;
  for (int v : vars) {
    Monomial m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(v)] = 3;
    Rational cc = cubic.coeff(m);
    if (!cc.is_zero()) {
      lead = v;
      c = cc;
      break;
    }
  }
  if (lead < 0) return std::nullopt;
  CubeData out;
  out.c = c;
  out.ell.assign(vars.size(), Rational(0));
  Series ell(n, cubic.trunc());
  for (size_t k = 0; k < vars.size(); ++k) {
    Rational coeff;
    if (vars[k] == lead) {
      coeff = Rational(1);
    } else {
      Monomial m(static_cast<size_t>(n), 0);
      m[static_cast<size_t>(lead)] = 2;
      m[static_cast<size_t>(vars[k])] = 1;
      coeff = cubic.coeff(m) / (Rational(3) * c);
    }
    out.ell[k] = coeff;
    Monomial mm(static_cast<size_t>(n), 0);
    mm[static_cast<size_t>(vars[k])] = 1;
    Series term(n, cubic.trunc());
    term.add_term(mm, coeff);
    ell += term;
  }
  Series cube = ell * ell * ell;
  cube *= c;
  if (!(cube == cubic)) return std::nullopt;
  return out;
}

// linear change over the complement variables mapping ell -> target var
void map_linear_to(Series& f, const std::vector<int>& vars, const std::vector<Rational>& ell,
                   int target_pos) {
  int n = f.nvars();
  std::vector<std::vector<Rational>> change(static_cast<size_t>(n),
                                            std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) change[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
  // substitution x_target := x_target - sum_{k != target} ell_k x_k  (ell_target = 1)
  int tv = vars[static_cast<size_t>(target_pos)];
  for (size_t k = 0; k < vars.size(); ++k) {
    if (static_cast<int>(k) == target_pos) continue;
    change[static_cast<size_t>(tv)][static_cast<size_t>(vars[k])] = -ell[k];
  }
  f = f.linear_change(change);
}

struct ETest {
  int m = 0;
  bool has_e7 = false;  // (a,b) = (1,3) achieves the minimum
  bool has_e8 = false;  // (a,b) = (0,5)
  bool empty = true;
};

// weighted test on h(y,z): m = min 2a + b over the support
ETest weighted_e_test(const Series& h, int yvar, int zvar) {
  ETest t;
  for (const auto& [m, c] : h.terms()) {
    int a = m[static_cast<size_t>(yvar)], b = m[static_cast<size_t>(zvar)];
    int val = 2 * a + b;
    if (t.empty || val < t.m) {
      t.m = val;
      t.has_e7 = t.has_e8 = false;
      t.empty = false;
    }
    if (val == t.m) {
      if (a == 1 && b == 3) t.has_e7 = true;
      if (a == 0 && b == 5) t.has_e8 = true;
    }
  }
  return t;
}

SingularityReport du_val_surface_verdict(const ETest& t) {
  SingularityReport r;
  if (t.empty) {
    r.cls = SingClass::Unknown;
    r.evidence = "residual vanishes to truncation order";
    return r;
  }
  r.jet_order = t.m;
  if (t.m == 4) {
    r.cls = SingClass::CE6;
    r.evidence = "weighted test: mult_t h(t^2 y, t z) = 4";
  } else if (t.m == 5 && t.has_e7) {
    r.cls = SingClass::CE7;
    r.evidence = "weighted test: mult 5 via y*z^3";
  } else if (t.m == 5 && t.has_e8) {
    r.cls = SingClass::CE8;
    r.evidence = "weighted test: mult 5 via z^5";
  } else if (t.m == 5) {
    r.cls = SingClass::CE;
    r.evidence = "weighted test: mult 5, subtype not pinned";
  } else {
    r.cls = SingClass::NotCDV;
    r.evidence = "weighted test exceeds 5";
  }
  return r;
}

}  // namespace

SingularityReport classify_cDV(const LocalModel& lm) {
  SingularityReport r;
  const Series& f0 = lm.f;
  int n = f0.nvars();
  if (f0.is_zero()) {
    r.cls = SingClass::Unknown;
    r.evidence = "equation vanishes to truncation order";
    return r;
  }
  int ord = f0.order();
  if (ord == 1) {
    r.cls = SingClass::Smooth;
    r.evidence = "nonzero linear part";
    r.jet_order = 1;
    return r;
  }
  if (ord >= 3) {
    r.cls = SingClass::NotCDV;
    r.evidence = "multiplicity at least 3";
    r.jet_order = ord;
    return r;
  }
  int rank = quadratic_rank(lm);
  if (rank >= 2) {
    r.cls = SingClass::CA;
    r.evidence = "rank(q2) = " + std::to_string(rank);
    r.jet_order = 2;
    return r;
  }
  // rank 1: normalize the double direction
  Series f = f0;
  Rational c2;
  auto piv = normalize_rank_one(f, &c2);
  if (!piv) {
    r.cls = SingClass::Unknown;
    r.evidence = "rank-1 quadric without a rational square direction";
    return r;
  }
  f = complete_square(f, *piv, c2);
  Series g = strip_variable_terms(f, *piv);
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != *piv) rest.push_back(i);
  Series q3 = g.graded_part(3);
  if (q3.is_zero()) {
    r.cls = SingClass::Unknown;
    r.evidence = "cubic of the complement vanishes";
    return r;
  }
  auto cube = cube_form(q3, rest);
  if (!cube) {
    r.cls = SingClass::CD;
    r.evidence = "cubic of the complement is not a cube";
    r.jet_order = 3;
    return r;
  }
  // cube: move it onto the variable carrying the unit coefficient
  int cube_pos = 0;
  for (size_t k = 0; k < cube->ell.size(); ++k)
    if (cube->ell[k] == Rational(1)) {
      cube_pos = static_cast<int>(k);
      break;
    }
  map_linear_to(g, rest, cube->ell, cube_pos);
  int yvar = rest[static_cast<size_t>(cube_pos)];
  std::vector<int> tail;
  for (int v : rest)
    if (v != yvar) tail.push_back(v);

  auto strip_cube = [&](const Series& s) {
    Series h = s;
    Monomial m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(yvar)] = 3;
    Series c3(n, s.trunc());
    c3.add_term(m, h.coeff(m));
    return h - c3;
  };

  if (tail.size() == 1) {
    ETest t = weighted_e_test(strip_cube(g), yvar, tail[0]);
    return du_val_surface_verdict(t);
  }
  if (tail.size() != 2) {
    r.cls = SingClass::Unknown;
    r.evidence = "unexpected local variable count";
    return r;
  }
  // hyperplane sections z - lambda w for several rational lambda
  std::optional<SingularityReport> agreed;
  for (int lambda : {1, 2, 3, 5, 7}) {
    Series image = Series::variable(n, g.trunc(), tail[1]);
    image *= Rational(lambda);
    Series section = g.substitute(tail[0], image);
    ETest t = weighted_e_test(strip_cube(section), yvar, tail[1]);
    SingularityReport verdict = du_val_surface_verdict(t);
    if (!agreed) {
      agreed = verdict;
    } else if (agreed->cls != verdict.cls) {
      r.cls = SingClass::Unknown;
      r.evidence = "hyperplane samples disagree";
      return r;
    }
  }
  return *agreed;
}

namespace {

std::vector<int> vars_of_weight(const LocalModel& lm, int w) {
  std::vector<int> out;
  for (size_t i = 0; i < lm.mu_weights.size(); ++i)
    if (lm.mu_weights[i] == w) out.push_back(static_cast<int>(i));
  return out;
}

void check_invariance(const LocalModel& lm) {
  for (const auto& [m, c] : lm.f.terms()) {
    long w = 0;
    for (size_t i = 0; i < m.size(); ++i) w += static_cast<long>(lm.mu_weights[i]) * m[i];
    if (w % lm.k != 0)
      throw std::invalid_argument("classify_hyperquotient: equation is not invariant");
  }
}

// kills cross terms u*a + v*b around an invertible u*v block
Series split_uv_block(Series f, int u, int v, const Rational& cuv) {
  int n = f.nvars();
  for (int guard = 0; guard < f.trunc() + 4; ++guard) {
    Series au(n, f.trunc()), av(n, f.trunc());
    for (const auto& [m, c] : f.terms()) {
      if (m[static_cast<size_t>(u)] == 1 && m[static_cast<size_t>(v)] == 0) {
        Monomial rest = m;
        rest[static_cast<size_t>(u)] = 0;
        if (total_degree(rest) >= 2) au.add_term(rest, c);
      } else if (m[static_cast<size_t>(v)] == 1 && m[static_cast<size_t>(u)] == 0) {
        Monomial rest = m;
        rest[static_cast<size_t>(v)] = 0;
        if (total_degree(rest) >= 2) av.add_term(rest, c);
      }
    }
    if (au.is_zero() && av.is_zero()) break;
    // f ~ cuv * u v + u au + v av + ... ; shift v := v - au/cuv, u := u - av/cuv
    Series nv = Series::variable(n, f.trunc(), v) - au * (Rational(1) / cuv);
    f = f.substitute(v, nv);
    Series nu = Series::variable(n, f.trunc(), u) - av * (Rational(1) / cuv);
    f = f.substitute(u, nu);
  }
  return f;
}

Series strip_two(const Series& f, int u, int v) {
  Series r(f.nvars(), f.trunc());
  for (const auto& [m, c] : f.terms())
    if (m[static_cast<size_t>(u)] == 0 && m[static_cast<size_t>(v)] == 0) r.add_term(m, c);
  return r;
}

SingularityReport quotient_case(const std::string& id, const std::string& ev, int jet) {
  SingularityReport r;
  r.cls = SingClass::QuotientTerminal;
  r.case_id = id;
  r.evidence = ev;
  r.jet_order = jet;
  return r;
}

SingularityReport not_terminal(const std::string& ev, int jet = 0) {
  SingularityReport r;
  r.cls = SingClass::NotCDV;
  r.evidence = ev;
  r.jet_order = jet;
  return r;
}

SingularityReport unknown_report(const std::string& ev) {
  SingularityReport r;
  r.cls = SingClass::Unknown;
  r.evidence = ev;
  return r;
}

SingularityReport classify_mu3(const LocalModel& lm) {
  int n = lm.f.nvars();
  std::vector<int> zs = vars_of_weight(lm, 2), ones = vars_of_weight(lm, 1),
                   taus = vars_of_weight(lm, 0);
  if (zs.size() != 1 || ones.size() != 2 || taus.size() != 1 || n != 4)
    throw std::invalid_argument("classify_hyperquotient: mu_3 type must be 1/3(2,1,1,0)");
  int z = zs[0], x = ones[0], y = ones[1], tau = taus[0];
  Series f = lm.f;
  Rational czx = f.coeff(pair_mon(n, z, x));
  Rational czy = f.coeff(pair_mon(n, z, y));
  if (!czx.is_zero() || !czy.is_zero()) {
    if (czx.is_zero()) {
      std::swap(x, y);
      std::swap(czx, czy);
    }
    // kill the z*y cross term: x := x - (czy/czx) y
    std::vector<std::vector<Rational>> ch(static_cast<size_t>(n),
                                          std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) ch[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
    ch[static_cast<size_t>(x)][static_cast<size_t>(y)] = -(czy / czx);
    f = f.linear_change(ch);
    f = split_uv_block(f, z, x, czx);
    Series g = strip_two(f, z, x);
    if (g.is_zero()) return unknown_report("z*x block with residual vanishing to truncation order");
    return quotient_case("1", "z*x block, residual g(y^3, t) of order " + std::to_string(g.order()),
                         2);
  }
  Monomial t2(static_cast<size_t>(n), 0);
  t2[static_cast<size_t>(tau)] = 2;
  Rational ctt = f.coeff(t2);
  if (ctt.is_zero()) return not_terminal("no invariant quadratic part", 2);
  f = complete_square(f, tau, ctt);
  Series g = strip_variable_terms(f, tau);
  Monomial z3(static_cast<size_t>(n), 0);
  z3[static_cast<size_t>(z)] = 3;
  Rational cz3 = g.coeff(z3);
  if (cz3.is_zero()) return not_terminal("t^2 without z^3: outside the terminal table", 3);
  // cube completion in z: kill z^2 * (invariant weight-2) terms
  for (int guard = 0; guard < g.trunc() + 4; ++guard) {
    Series q(n, g.trunc());
    for (const auto& [m, c] : g.terms()) {
      if (m[static_cast<size_t>(z)] != 2) continue;
      Monomial rest = m;
      rest[static_cast<size_t>(z)] = 0;
      if (total_degree(rest) < 1) continue;
      q.add_term(rest, c);
    }
    if (q.is_zero()) break;
    Series nz = Series::variable(n, g.trunc(), z) - q * (Rational(1) / (Rational(3) * cz3));
    g = g.substitute(z, nz);
  }
  // binary cubic in the weight-1 variables
  Monomial mx3(static_cast<size_t>(n), 0), mx2y(static_cast<size_t>(n), 0),
      mxy2(static_cast<size_t>(n), 0), my3(static_cast<size_t>(n), 0);
  mx3[static_cast<size_t>(x)] = 3;
  mx2y[static_cast<size_t>(x)] = 2;
  mx2y[static_cast<size_t>(y)] = 1;
  mxy2[static_cast<size_t>(x)] = 1;
  mxy2[static_cast<size_t>(y)] = 2;
  my3[static_cast<size_t>(y)] = 3;
  Rational a = g.coeff(mx3), b = g.coeff(mx2y), c = g.coeff(mxy2), d = g.coeff(my3);
  if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero())
    return not_terminal("t^2 + z^3 with vanishing binary cubic", 3);
  switch (binary_cubic_shape(a, b, c, d)) {
    case CubicShape::ThreeDistinct:
      return quotient_case("4a", "t^2 + z^3 + three-distinct binary cubic", 3);
    case CubicShape::TwoDistinct:
      return quotient_case("4b", "t^2 + z^3 + two-distinct binary cubic", 3);
    case CubicShape::Cube:
      return quotient_case("4c", "t^2 + z^3 + cube binary cubic", 3);
  }
  return unknown_report("unreachable");
}

SingularityReport classify_mu2(const LocalModel& lm) {
  int n = lm.f.nvars();
  std::vector<int> ones = vars_of_weight(lm, 1), taus = vars_of_weight(lm, 0);
  if (ones.size() != 3 || taus.size() != 1 || n != 4)
    throw std::invalid_argument("classify_hyperquotient: mu_2 type must be 1/2(1,1,1,0)");
  int tau = taus[0];
  Series f = lm.f;
  // odd block rank
  MatQ ob = MatQ::Zero(3, 3);
  for (int i = 0; i < 3; ++i) {
    Monomial mii(static_cast<size_t>(n), 0);
    mii[static_cast<size_t>(ones[static_cast<size_t>(i)])] = 2;
    ob(i, i) = f.coeff(mii);
    for (int j = i + 1; j < 3; ++j) {
      Rational half =
          f.coeff(pair_mon(n, ones[static_cast<size_t>(i)], ones[static_cast<size_t>(j)])) *
          Rational(1, 2);
      ob(i, j) = half;
      ob(j, i) = half;
    }
  }
  int rodd = rank_exact(ob);
  Monomial t2(static_cast<size_t>(n), 0);
  t2[static_cast<size_t>(tau)] = 2;
  Rational ctt = f.coeff(t2);

  if (rodd >= 2) {
    // case (1): split two odd directions
    Rational c1;
    auto p1 = normalize_rank_one(f, &c1, &ones);
    if (!p1) {
      // all odd diagonal entries vanish: make one nonzero by an odd shear
      std::vector<std::vector<Rational>> ch(static_cast<size_t>(n),
                                            std::vector<Rational>(static_cast<size_t>(n)));
      for (int i = 0; i < n; ++i) ch[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
      int u = -1, v = -1;
      for (int i = 0; i < 3 && u < 0; ++i)
        for (int j = i + 1; j < 3 && u < 0; ++j)
          if (!ob(i, j).is_zero()) {
            u = ones[static_cast<size_t>(i)];
            v = ones[static_cast<size_t>(j)];
          }
      if (u < 0) return unknown_report("odd rank 2 without a visible block");
      ch[static_cast<size_t>(u)][static_cast<size_t>(v)] = Rational(1);
      f = f.linear_change(ch);
      p1 = normalize_rank_one(f, &c1, &ones);
      if (!p1) return unknown_report("odd normalization failed");
    }
    f = complete_square(f, *p1, c1);
    std::vector<int> rest_odd;
    for (int v : ones)
      if (v != *p1) rest_odd.push_back(v);
    Rational c2;
    auto p2 = normalize_rank_one(f, &c2, &rest_odd);
    if (!p2) {
      // remaining odd block may again be off-diagonal
      std::vector<std::vector<Rational>> ch(static_cast<size_t>(n),
                                            std::vector<Rational>(static_cast<size_t>(n)));
      for (int i = 0; i < n; ++i) ch[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(1);
      ch[static_cast<size_t>(rest_odd[0])][static_cast<size_t>(rest_odd[1])] = Rational(1);
      f = f.linear_change(ch);
      p2 = normalize_rank_one(f, &c2, &rest_odd);
      if (!p2) return unknown_report("odd normalization failed");
    }
    f = complete_square(f, *p2, c2);
    Series g = strip_two(f, *p1, *p2);
    if (g.is_zero())
      return unknown_report("rank-2 block with residual vanishing to truncation order");
    return quotient_case("1", "two odd square directions, residual of order " +
                                  std::to_string(g.order()),
                         2);
  }
  if (rodd == 1 && !ctt.is_zero()) {
    Rational codd;
    auto podd = normalize_rank_one(f, &codd, &ones);
    if (!podd) return unknown_report("odd normalization failed");
    f = complete_square(f, *podd, codd);
    f = complete_square(f, tau, ctt);
    Series g = strip_two(f, *podd, tau);
    if (g.is_zero())
      return unknown_report("t^2 + w^2 with residual vanishing to truncation order");
    return quotient_case("3", "t^2 + w^2 + g4 of order " + std::to_string(g.order()), 2);
  }
  if (rodd == 0) return not_terminal("quadratic part has no odd direction", 2);

  // rodd == 1, no t^2: the (5)/(6) family
  Rational cw;
  auto pw = normalize_rank_one(f, &cw, &ones);
  if (!pw) return unknown_report("odd normalization failed");
  f = complete_square(f, *pw, cw);
  Series g = strip_variable_terms(f, *pw);
  std::vector<int> xy;
  for (int v : ones)
    if (v != *pw) xy.push_back(v);
  // j: smallest pure power of tau
  int j = -1;
  for (int e = 2; e < g.trunc(); ++e) {
    Monomial m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(tau)] = e;
    if (!g.coeff(m).is_zero()) {
      j = e;
      break;
    }
  }
  // rank of the tau-linear quadratic in (x,y)
  MatQ q2 = MatQ::Zero(2, 2);
  {
    Monomial mxx(static_cast<size_t>(n), 0), myy(static_cast<size_t>(n), 0),
        mxy(static_cast<size_t>(n), 0);
    mxx[static_cast<size_t>(tau)] = 1;
    mxx[static_cast<size_t>(xy[0])] = 2;
    myy[static_cast<size_t>(tau)] = 1;
    myy[static_cast<size_t>(xy[1])] = 2;
    mxy[static_cast<size_t>(tau)] = 1;
    mxy[static_cast<size_t>(xy[0])] = 1;
    mxy[static_cast<size_t>(xy[1])] = 1;
    q2(0, 0) = g.coeff(mxx);
    q2(1, 1) = g.coeff(myy);
    Rational half = g.coeff(mxy) * Rational(1, 2);
    q2(0, 1) = half;
    q2(1, 0) = half;
  }
  int rq = rank_exact(q2);
  // order of the tau-free part
  Series h4(n, g.trunc());
  for (const auto& [m, c] : g.terms())
    if (m[static_cast<size_t>(tau)] == 0) h4.add_term(m, c);
  if (rq == 2) {
    if (j == 3) return quotient_case("5a", "w^2 + t^3 + t*xy", 3);
    if (j >= 4) return quotient_case("5b", "w^2 + t*xy + t^" + std::to_string(j), 3);
    return unknown_report("no pure t-power within truncation order");
  }
  if (rq == 1) {
    if (j >= 3) return quotient_case("5c", "w^2 + t*x^2 + t^" + std::to_string(j), 3);
    return unknown_report("no pure t-power within truncation order");
  }
  if (j == 3) {
    if (h4.is_zero()) return unknown_report("t-free quartic vanishes to truncation order");
    if (h4.order() == 4) return quotient_case("6", "w^2 + t^3 + h4 of exact order 4", 4);
    return not_terminal("w^2 + t^3 with t-free part of order > 4", 4);
  }
  if (j >= 4) return not_terminal("w^2 with t-power >= 4 and no t-quadratic", 4);
  return unknown_report("no pure t-power within truncation order");
}

}  // namespace

SingularityReport classify_hyperquotient(const LocalModel& lm) {
  check_invariance(lm);
  if (lm.k == 3) return classify_mu3(lm);
  if (lm.k == 2) return classify_mu2(lm);
  throw std::invalid_argument("classify_hyperquotient: k must be 2 or 3");
}

SingularityReport classify_local(const LocalModel& lm) {
  if (lm.k == 1) return classify_cDV(lm);
  SingularityReport r = classify_hyperquotient(lm);
  return r;
}

std::optional<std::string> nonisolated_witness(const AnyFamily& fam,
                                               const std::vector<int>& vanish,
                                               const std::vector<std::string>& names) {
  const WeightSystem& ws = family_weights(fam);
  int n = ws.n();
  std::vector<const WPoly*> eqs;
  const WPoly& F = family_F(fam);
  eqs.push_back(&F);
  const WPoly* H = nullptr;
  if (std::holds_alternative<CIFamily>(fam)) {
    H = &std::get<CIFamily>(fam).H;
    eqs.push_back(H);
  }
  auto restrict_curve = [&](const WPoly& g) { return g.restrict_zero(vanish).at_t0(); };
  for (const WPoly* eq : eqs)
    if (!restrict_curve(*eq).is_zero()) return std::nullopt;

  std::vector<WPoly> dF, dH;
  for (int i = 0; i < n; ++i) dF.push_back(F.partial_derivative(i));
  dF.push_back(F.partial_derivative_t());
  if (H) {
    for (int i = 0; i < n; ++i) dH.push_back(H->partial_derivative(i));
    dH.push_back(H->partial_derivative_t());
  }
  bool singular = true;
  if (!H) {
    for (const WPoly& d : dF)
      if (!restrict_curve(d).is_zero()) singular = false;
  } else {
    for (size_t i = 0; i < dF.size() && singular; ++i)
      for (size_t j = 0; j < dH.size() && singular; ++j) {
        WPoly minor = dF[i] * dH[j] - dF[j] * dH[i];
        if (!restrict_curve(minor).is_zero()) singular = false;
      }
  }
  if (!singular) return std::nullopt;
  std::ostringstream os;
  os << "singular along {";
  for (size_t i = 0; i < vanish.size(); ++i)
    os << (i ? " = " : "") << names[static_cast<size_t>(vanish[i])];
  os << " = t = 0}";
  return os.str();
}

std::vector<std::vector<int>> coordinate_curves(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> vanish;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) vanish.push_back(k);
      out.push_back(vanish);
    }
  return out;
}

PointReport classify_point(const AnyFamily& fam, const std::vector<Rational>& point,
                           std::optional<int> chart, int trunc) {
  const WeightSystem& ws = family_weights(fam);
  int n = ws.n();
  PointReport pr;
  pr.point = point;
  int c = -1;
  if (chart) {
    c = *chart;
  } else {
    // prefer a weight-1 chart; otherwise the nonzero coordinate itself
    for (int i = n - 1; i >= 0; --i)
      if (ws.weight(i) == 1 && !point[static_cast<size_t>(i)].is_zero()) c = i;
    if (c < 0)
      for (int i = 0; i < n; ++i)
        if (!point[static_cast<size_t>(i)].is_zero()) c = i;
  }
  pr.chart = c;
  if (c < 0) {
    pr.error = "zero point";
    return pr;
  }
  try {
    LocalModel lm = local_model(fam, point, c, trunc);
    pr.quotient_k = lm.k;
    pr.quotient_weights = lm.mu_weights;
    pr.report = classify_local(lm);
  } catch (const std::invalid_argument& e) {
    pr.error = e.what();
  }
  return pr;
}

std::vector<std::vector<Rational>> coordinate_points_on_fiber(const AnyFamily& fam) {
  const WeightSystem& ws = family_weights(fam);
  int n = ws.n();
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> p(static_cast<size_t>(n), Rational(0));
    p[static_cast<size_t>(i)] = Rational(1);
    bool on = family_F(fam).evaluate(p, Rational(0)).is_zero();
    if (on && std::holds_alternative<CIFamily>(fam))
      on = std::get<CIFamily>(fam).H.evaluate(p, Rational(0)).is_zero();
    if (on) out.push_back(p);
  }
  return out;
}

}  // namespace dpstab
