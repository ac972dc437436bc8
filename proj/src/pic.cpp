#include "dpstab/pic.hpp"

#include "dpstab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpstab {
namespace pic {

std::vector<long> MonomialSet::exponent_sums() const {
  std::vector<long> s(static_cast<size_t>(ws.n()), 0);
  for (const Monomial& m : monomials)
    for (size_t i = 0; i < m.size(); ++i) s[i] += m[i];
  return s;
}

MonomialSet monomials(const WeightSystem& ws, long r) {
  return MonomialSet{ws, r, enumerate_monomials(ws, r)};
}

long socle_degree(const WeightSystem& ws, int d) {
  long D = 1;
  for (int c : ws.weights()) D += d - 2L * c;
  return D;
}

FermatData fermat_counts(const WeightSystem& ws, int d) {
  if (!ws.fermat_admissible(d))
    throw std::invalid_argument("fermat_counts: every weight must divide the degree");
  long D = socle_degree(ws, d);
  int n = ws.n();
  std::vector<long> M(static_cast<size_t>(n), 0);
  for (const Monomial& m : enumerate_monomials(ws, D)) {
    int owner = -1;
    bool multiple = false;
    for (int i = 0; i < n; ++i) {
      if (m[static_cast<size_t>(i)] >= d / ws.weight(i) - 1) {
        if (owner >= 0) {
          multiple = true;
          break;
        }
        owner = i;
      }
    }
    if (owner >= 0 && !multiple) ++M[static_cast<size_t>(owner)];
  }
  if (ws.weight(n - 1) == 1) {
    long formula = fermat_count_product_formula(ws, d);
    if (M[static_cast<size_t>(n - 1)] != formula)
      throw std::logic_error("fermat_counts: product formula mismatch");
  }
  return FermatData{ws, d, D, M};
}

long fermat_count_product_formula(const WeightSystem& ws, int d) {
  long p = 1;
  for (int j = 0; j < ws.n() - 1; ++j) p *= d / ws.weight(j) - 1;
  return p;
}

DeltaCoeffs hmk_delta_coeffs(const WeightSystem& ws, int d) {
  FermatData fd = fermat_counts(ws, d);
  int n = ws.n(), s = ws.s();
  DeltaCoeffs out;
  long total = 0;
  for (long m : fd.M) total += m;
  out.delta0.a0 = Rational(total);
  for (int i = 0; i < s; ++i)
    out.delta0.a.push_back(Rational(static_cast<long long>(d) * fd.M[static_cast<size_t>(i)],
                                    ws.weight(i)));
  out.delta0.a_last = s < n ? Rational(static_cast<long long>(d) * fd.M[static_cast<size_t>(s)], 1)
                            : Rational(0);
  for (int l = 0; l < s; ++l) {
    GenericCoeffs g;
    g.a0 = Rational(1);
    g.a.assign(static_cast<size_t>(s), Rational(0));
    g.a[static_cast<size_t>(l)] = Rational(d, ws.weight(l));
    g.a_last = Rational(0);
    out.delta.push_back(std::move(g));
  }
  return out;
}

Rational mu_tautological(const HypersurfaceFamily& fam, const OneParamSubgroup& rho, int m) {
  long C = 1;
  std::vector<int> seen;
  for (int c : fam.ws.weights()) {
    if (c > 1 && std::find(seen.begin(), seen.end(), c) == seen.end()) {
      seen.push_back(c);
      C *= c;
    }
  }
  long mc = static_cast<long>(m) * C;
  if (mc < fam.degree) throw std::invalid_argument("mu_tautological: m*C < d");
  MonomialSet lo = monomials(fam.ws, mc - fam.degree);
  MonomialSet hi = monomials(fam.ws, mc);
  Rational v = Rational(lo.size()) * Rational(mult(fam.F, rho));
  std::vector<long> slo = lo.exponent_sums(), shi = hi.exponent_sums();
  for (int i = 0; i < fam.ws.n(); ++i)
    v += Rational(slo[static_cast<size_t>(i)] - shi[static_cast<size_t>(i)]) * Rational(rho.w[static_cast<size_t>(i)]);
  return v;
}

namespace {

struct CISpaceData {
  WeightSystem big;
  WeightSystem sub;
  int d;                    // degree of F (and of the sub-space hypersurfaces)
  int dH;                   // degree of H
  std::vector<std::string> basis_names;
  std::vector<MuFunctional> basis;
  int delta_count;          // s_sub + 1 boundary bundles
};

MuFunctional t_row(const WeightSystem& big, int m) {
  MonomialSet sm = monomials(big, m);
  MuFunctional f;
  f.wc.clear();
  for (long s : sm.exponent_sums()) f.wc.push_back(Rational(s));
  return f;
}

// Lambda_m = T_m - det of the degree-m slice of the ideal (F,H):
// mu = [m >= dF] mult(F) + |S_{m-dH}| mult(H) + w(S_{m-dH}) - w(S_m).
MuFunctional lambda_row(const WeightSystem& big, int m, int dF, int dH) {
  MonomialSet sm = monomials(big, m);
  MonomialSet sq = monomials(big, m - dH);
  MuFunctional f;
  f.aF = Rational(m >= dF ? 1 : 0);
  f.aH = Rational(sq.size());
  std::vector<long> hi = sm.exponent_sums(), lo = sq.exponent_sums();
  for (size_t i = 0; i < hi.size(); ++i) f.wc.push_back(Rational(hi[i] - lo[i]));
  return f;
}

CISpaceData ci_space_data(SpaceId space) {
  if (space == SpaceId::Dp2CI) {
    CISpaceData d{WeightSystem({2, 2, 1, 1, 1}), WeightSystem({2, 1, 1, 1}), 4, 2, {}, {}, 2};
    d.basis_names = {"T1", "T2", "L02", "L04"};
    d.basis.push_back(t_row(d.big, 1));
    d.basis.push_back(t_row(d.big, 2));
    MuFunctional l2;
    l2.aH = Rational(1);
    l2.wc.assign(5, Rational(0));
    d.basis.push_back(l2);  // mult(H), the degree-2 slice of the ideal is spanned by H
    // degree-4 slice: mu = mult(F) + 5 mult(H) + w(S_2)
    MuFunctional l4;
    l4.aF = Rational(1);
    l4.aH = Rational(5);
    for (long s : monomials(d.big, 2).exponent_sums()) l4.wc.push_back(Rational(-s));
    d.basis.push_back(l4);
    return d;
  }
  if (space == SpaceId::Dp1CI) {
    CISpaceData d{WeightSystem({3, 3, 2, 1, 1}), WeightSystem({3, 2, 1, 1}), 6, 3, {}, {}, 3};
    d.basis_names = {"T6", "T3", "T4", "L5", "L6"};
    d.basis.push_back(t_row(d.big, 6));
    d.basis.push_back(t_row(d.big, 3));
    d.basis.push_back(t_row(d.big, 4));
    d.basis.push_back(lambda_row(d.big, 5, 6, 3));
    d.basis.push_back(lambda_row(d.big, 6, 6, 3));
    return d;
  }
  throw std::invalid_argument("character_table: only the CI spaces have tables");
}

WPoly embedded_partial_fermat(const CISpaceData& sd, int ell) {
  // f_ell in the sub-space {x_0 = 0}, written in the big coordinates
  int n = sd.big.n();
  WPoly f(n);
  for (int j = 0; j < sd.sub.n(); ++j) {
    if (j == ell - 1) continue;
    Monomial m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(j + 1)] = sd.d / sd.sub.weight(j);
    f.add_term(m, TPoly(1));
  }
  return f;
}

}  // namespace

CharacterTable character_table(SpaceId space) {
  CISpaceData sd = ci_space_data(space);
  int n = sd.big.n();
  int fermats = sd.delta_count;  // ell = 1..s_sub+1
  FermatData sub_fd = fermat_counts(sd.sub, sd.d);

  // columns: (f_ell, rho_ell), then (f_i, rho_irr), (f_i, rho_0)
  struct Column {
    std::string label;
    int ell;
    OneParamSubgroup rho;
  };
  std::vector<Column> cols;
  for (int ell = 1; ell <= fermats; ++ell) {
    std::vector<int> w(static_cast<size_t>(n), 0);
    w[static_cast<size_t>(ell)] = 1;
    cols.push_back({"(f" + std::to_string(ell) + ",rho" + std::to_string(ell) + ")", ell,
                    OneParamSubgroup(w)});
  }
  cols.push_back({"(fi,rho_irr)", 1, rho_irrelevant(sd.big)});
  std::vector<int> w0(static_cast<size_t>(n), 0);
  w0[0] = 1;
  cols.push_back({"(fi,rho0)", 1, OneParamSubgroup(w0)});

  CharacterTable table;
  table.space = space;
  table.basis_count = static_cast<int>(sd.basis.size());
  table.bundles = sd.basis_names;
  for (int j = 0; j < sd.delta_count; ++j) table.bundles.push_back("delta" + std::to_string(j));
  for (const Column& c : cols) table.columns.push_back(c.label);
  table.basis_functionals = sd.basis;

  Monomial h0(static_cast<size_t>(n), 0);
  h0[0] = 1;
  WPoly H = WPoly::monomial(n, h0, TPoly(1));

  // basis rows, evaluated at the fixed points
  for (const MuFunctional& f : sd.basis) {
    std::vector<long> row;
    for (const Column& c : cols) {
      CIFamily fam(sd.big, sd.d, sd.dH, embedded_partial_fermat(sd, c.ell), H);
      ReduceResult red = reduce_ci(fam, c.rho);
      Rational v = f.eval(mult(red.fam.F, c.rho), mult(red.fam.H, c.rho), c.rho);
      if (!v.is_integer()) throw std::logic_error("character_table: non-integer character");
      row.push_back(static_cast<long>(v.num().get_si()));
    }
    table.chi.push_back(std::move(row));
  }

  // delta rows: the (f_ell, rho_ell) characters come from the partial-Fermat
  // counts; the boundary bundles are invariant for rho_irr and rho_0.
  int s_sub = sd.sub.s();
  for (int j = 0; j <= s_sub; ++j) {  // j = 0 is delta0
    std::vector<long> row;
    for (const Column& c : cols) {
      if (c.rho.w == rho_irrelevant(sd.big).w || c.rho.w == w0) {
        row.push_back(0);
        continue;
      }
      int ell = c.ell;  // 1-based sub-space variable index
      int c_ell = sd.sub.weight(ell - 1);
      long v = 0;
      if (j == 0)
        v = -(sd.d / c_ell) * sub_fd.M[static_cast<size_t>(ell - 1)];
      else if (j == ell && ell <= s_sub)
        v = -(sd.d / c_ell);
      row.push_back(v);
    }
    table.chi.push_back(std::move(row));
  }
  return table;
}

std::vector<Rational> express_divisor(SpaceId space, const std::string& target) {
  CharacterTable table = character_table(space);
  int row = -1;
  for (size_t i = 0; i < table.bundles.size(); ++i)
    if (table.bundles[i] == target) row = static_cast<int>(i);
  if (row < 0) throw std::invalid_argument("express_divisor: unknown bundle '" + target + "'");
  Eigen::Index cols = static_cast<Eigen::Index>(table.columns.size());
  Eigen::Index basis = table.basis_count;
  MatQ A(cols, basis);
  VecQ b(cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index k = 0; k < basis; ++k) A(c, k) = Rational(table.chi[static_cast<size_t>(k)][static_cast<size_t>(c)]);
    b(c) = Rational(table.chi[static_cast<size_t>(row)][static_cast<size_t>(c)]);
  }
  auto x = solve_exact(A, b);
  if (!x) throw std::logic_error("express_divisor: singular system (table bug)");
  std::vector<Rational> out;
  for (Eigen::Index k = 0; k < basis; ++k) out.push_back((*x)(k));
  return out;
}

bool EffectivityCone::contains(const GenericCoeffs& gc) const {
  std::vector<Rational> v;
  v.push_back(gc.a0);
  for (const Rational& a : gc.a) v.push_back(a);
  v.push_back(gc.a_last);
  Rational eq(0);
  for (size_t i = 0; i < v.size(); ++i) eq += equality[i] * v[i];
  if (!eq.is_zero()) return false;
  for (const auto& row : inequalities) {
    Rational lhs(0);
    for (size_t i = 0; i < v.size(); ++i) lhs += row[i] * v[i];
    if (lhs.sign() < 0) return false;
  }
  return true;
}

GenericCoeffs EffectivityCone::balanced() const {
  GenericCoeffs g;
  g.a0 = Rational(1);
  Rational ratio(d, ws.weight_sum());
  g.a.assign(static_cast<size_t>(ws.s()), ratio);
  g.a_last = ratio;
  return g;
}

EffectivityCone effectivity_cone(const WeightSystem& ws, int d) {
  if (ws.weight(ws.n() - 1) != 1)
    throw std::invalid_argument("effectivity_cone: requires c_n = 1");
  FermatData fd = fermat_counts(ws, d);
  int s = ws.s(), n = ws.n();
  size_t dim = static_cast<size_t>(s) + 2;
  EffectivityCone cone{ws, d, {}, {}};
  cone.equality.assign(dim, Rational(0));
  cone.equality[0] = Rational(d);
  for (int i = 0; i < s; ++i) cone.equality[static_cast<size_t>(i) + 1] = Rational(-ws.weight(i));
  cone.equality[dim - 1] = Rational(-(n - s));
  for (size_t i = 0; i < dim; ++i) {
    std::vector<Rational> row(dim, Rational(0));
    row[i] = Rational(1);
    cone.inequalities.push_back(std::move(row));
  }
  long m_last = fd.M[static_cast<size_t>(s)];
  for (int l = 0; l < s; ++l) {
    std::vector<Rational> row(dim, Rational(0));
    row[static_cast<size_t>(l) + 1] = Rational(static_cast<long long>(ws.weight(l)) * m_last);
    row[dim - 1] = Rational(-fd.M[static_cast<size_t>(l)]);
    cone.inequalities.push_back(std::move(row));
  }
  return cone;
}

}  // namespace pic
}  // namespace dpstab
