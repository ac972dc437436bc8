#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpstab/hmk.hpp"
#include "dpstab/pic.hpp"

#include <random>

using namespace dpstab;

namespace {

const WeightSystem kDp1({3, 3, 2, 1, 1});
const std::vector<std::string> kDp1Names{"w", "s", "z", "x", "y"};

WPoly dp1(const std::string& text, int degree) {
  return parse_wpoly(text, kDp1, kDp1Names, degree);
}

WPoly rnd_poly(std::mt19937_64& rng, const WeightSystem& ws, long degree, int tmax,
               double keep = 0.4) {
  std::uniform_int_distribution<int> coeff(-3, 3), texp(0, tmax);
  std::uniform_real_distribution<double> u(0, 1);
  WPoly f(ws.n());
  for (const Monomial& m : enumerate_monomials(ws, degree)) {
    if (u(rng) > keep) continue;
    int c = coeff(rng);
    if (c == 0) continue;
    f.add_term(m, TPoly::term(Rational(c), texp(rng)));
  }
  return f;
}

OneParamSubgroup rnd_rho(std::mt19937_64& rng, int n, int wmax) {
  std::uniform_int_distribution<int> w(0, wmax);
  std::vector<int> v(static_cast<size_t>(n));
  for (int& x : v) x = w(rng);
  return OneParamSubgroup(v);
}

}  // namespace

TEST_CASE("mult examples") {
  WeightSystem ws({1, 1});
  std::vector<std::string> names{"x", "y"};
  WPoly f = parse_wpoly("x^2 + t*y^2", ws, names, 2);
  CHECK(mult(f, OneParamSubgroup({1, 0})) == 1);
  CHECK(mult(f, OneParamSubgroup({0, 0})) == 0);
  // rho_irr on a degree-d equation with t-valuation 0 gives d
  WPoly g = dp1("w^2 + z^3 + x^6 + y^6", 6);
  CHECK(mult(g, rho_irrelevant(kDp1)) == 6);
  WPoly h = dp1("w^2 + t^2*z^3 + x^6", 6);
  CHECK(mult(h, rho_irrelevant(kDp1)) == 6);
}

TEST_CASE("transform_hyp examples") {
  WeightSystem ws({1, 1});
  std::vector<std::string> names{"x", "y"};
  HypersurfaceFamily fam(ws, 2, parse_wpoly("x^2 + t*y^2", ws, names, 2));
  HypersurfaceFamily moved = transform_hyp(fam, OneParamSubgroup({1, 0}));
  CHECK(moved.F == parse_wpoly("t*x^2 + y^2", ws, names, 2));
  HypersurfaceFamily same = transform_hyp(fam, OneParamSubgroup({0, 0}));
  CHECK(same.F == fam.F);
}

TEST_CASE("mult cocycle under iterated transforms") {
  std::mt19937_64 rng(21);
  WeightSystem ws({3, 2, 1, 1});
  int done = 0;
  while (done < 100) {
    WPoly f = rnd_poly(rng, ws, 6, 2);
    if (f.is_zero()) continue;
    f = f.normalize_t();
    HypersurfaceFamily fam(ws, 6, f);
    OneParamSubgroup r1 = rnd_rho(rng, 4, 3), r2 = rnd_rho(rng, 4, 3);
    std::vector<int> sum(4);
    for (int i = 0; i < 4; ++i)
      sum[static_cast<size_t>(i)] = r1.w[static_cast<size_t>(i)] + r2.w[static_cast<size_t>(i)];
    HypersurfaceFamily moved = transform_hyp(fam, r1);
    CHECK(mult(f, OneParamSubgroup(sum)) == mult(f, r1) + mult(moved.F, r2));
    ++done;
  }
}

TEST_CASE("mult is a valuation") {
  std::mt19937_64 rng(22);
  WeightSystem ws({2, 1, 1});
  int done = 0;
  while (done < 100) {
    WPoly f = rnd_poly(rng, ws, 4, 2), g = rnd_poly(rng, ws, 4, 2);
    if (f.is_zero() || g.is_zero()) continue;
    OneParamSubgroup rho = rnd_rho(rng, 3, 3);
    CHECK(mult(f * g, rho) == mult(f, rho) + mult(g, rho));
    if (!(f + g).is_zero())
      CHECK(mult(f + g, rho) >= std::min(mult(f, rho), mult(g, rho)));
    ++done;
  }
}

TEST_CASE("CIFamily validates the independence of central fibers") {
  WPoly F = dp1("s*x^3", 6);
  WPoly H = dp1("s", 3);
  CHECK_THROWS_AS(CIFamily(kDp1, 6, 3, F, H), std::invalid_argument);
  CHECK_NOTHROW(CIFamily(kDp1, 6, 3, dp1("w^2 + z^3 + x^6 + y^6", 6), H));
}

TEST_CASE("reduce_ci performs the division step behind the s-shift move") {
  // F = A*B + t*w^2, H = s + A with A = y^3 - x*z, B = x^3 + y^3 + x*z
  WPoly A = dp1("y^3 - x*z", 3);
  WPoly B = dp1("x^3 + y^3 + x*z", 3);
  WPoly F = A * B + dp1("t*w^2", 6);
  WPoly H = dp1("s", 3) + A;
  CIFamily fam(kDp1, 6, 3, F, H);
  OneParamSubgroup rho({0, 1, 0, 0, 0});  // weight on s
  CHECK(mult(fam.F, rho) == 0);
  ReduceResult red = reduce_ci(fam, rho);
  CHECK(!red.obstructed);
  CHECK(red.steps >= 1);
  CHECK(mult(red.fam.F, rho) == 1);
  // the move stayed inside F + (forms)*H
  CHECK((red.fam.F - (fam.F - B * H)).is_zero());
}

TEST_CASE("reduce_ci trivial cases") {
  WPoly F = dp1("w^2 + z^3 + x^6 + y^6", 6);
  WPoly H = dp1("s", 3);
  CIFamily fam(kDp1, 6, 3, F, H);
  OneParamSubgroup zero({0, 0, 0, 0, 0});
  ReduceResult red0 = reduce_ci(fam, zero);
  CHECK(red0.steps == 0);
  CHECK(red0.fam.F == F);
  OneParamSubgroup rho({0, 1, 0, 0, 0});
  ReduceResult red1 = reduce_ci(fam, rho);
  CHECK(red1.steps == 0);  // leading form already independent of (s)
}

TEST_CASE("reduce_ci reports obstructed lifts") {
  // leading form of F is x^2 z^2 = (x z) * (z x), but the lift of the
  // quotient x z needs t^{2 - 2 - 1} = t^{-1}
  WPoly F = dp1("x^2*z^2", 6);
  WPoly H = dp1("y^3 + t*z*x", 3);
  CIFamily fam(kDp1, 6, 3, F, H);
  OneParamSubgroup rho({0, 0, 0, 1, 1});
  CHECK(mult(fam.H, rho) == 2);
  CHECK(mult(fam.F, rho) == 2);
  ReduceResult red = reduce_ci(fam, rho);
  CHECK(red.obstructed);
  CHECK(red.fam.F == F);
}

TEST_CASE("preset catalog: quartics in P(2,1,1,1)") {
  LineBundleSpec d0 = preset_bundle(SpaceId::Quartic2111, "delta0");
  CHECK(d0.primary.aF == Rational(40));
  CHECK(d0.primary.wc ==
        std::vector<Rational>{Rational(26), Rational(36), Rational(36), Rational(36)});
  LineBundleSpec bal = preset_bundle(SpaceId::Quartic2111, "bal");
  CHECK(bal.primary.aF == Rational(1));
  CHECK(bal.primary.wc ==
        std::vector<Rational>{Rational(4, 5), Rational(4, 5), Rational(4, 5), Rational(4, 5)});
}

TEST_CASE("preset catalog: sextics in P(3,2,1,1)") {
  LineBundleSpec d0 = preset_bundle(SpaceId::Sextic3211, "delta0");
  CHECK(d0.primary.aF == Rational(48));
  CHECK(d0.primary.wc ==
        std::vector<Rational>{Rational(32), Rational(36), Rational(60), Rational(60)});
  LineBundleSpec bal = preset_bundle(SpaceId::Sextic3211, "bal");
  CHECK(bal.primary.aF == Rational(1));
  for (const Rational& c : bal.primary.wc) CHECK(c == Rational(6, 7));
  LineBundleSpec gor = preset_bundle(SpaceId::Sextic3211, "gor");
  CHECK(gor.primary.aF == Rational(2));
  CHECK(gor.primary.wc ==
        std::vector<Rational>{Rational(2), Rational(3), Rational(0), Rational(0)});
  REQUIRE(gor.secondary.has_value());
  CHECK(gor.secondary->aF == Rational(48));
}

TEST_CASE("preset catalog: CI spaces") {
  LineBundleSpec d0 = preset_bundle(SpaceId::Dp2CI, "delta0");
  CHECK(d0.primary.aF == Rational(40));
  CHECK(d0.primary.aH == Rational(26));
  CHECK(d0.primary.wc == std::vector<Rational>{Rational(26), Rational(26), Rational(36),
                                               Rational(36), Rational(36)});
  LineBundleSpec d1 = preset_bundle(SpaceId::Dp2CI, "delta1");
  CHECK(d1.primary.aF == Rational(1));
  CHECK(d1.primary.aH == Rational(2));
  LineBundleSpec bal2 = preset_bundle(SpaceId::Dp2CI, "bal");
  CHECK(bal2.primary.aH == Rational(4, 5));

  LineBundleSpec e0 = preset_bundle(SpaceId::Dp1CI, "delta0");
  CHECK(e0.primary.aF == Rational(48));
  CHECK(e0.primary.aH == Rational(32));
  CHECK(e0.primary.wc == std::vector<Rational>{Rational(32), Rational(32), Rational(36),
                                               Rational(60), Rational(60)});
  LineBundleSpec e2 = preset_bundle(SpaceId::Dp1CI, "delta2");
  CHECK(e2.primary.aH == Rational(0));
  CHECK(e2.primary.wc == std::vector<Rational>{Rational(0), Rational(0), Rational(3),
                                               Rational(0), Rational(0)});
  LineBundleSpec ter = preset_bundle(SpaceId::Dp1CI, "ter");
  REQUIRE(ter.secondary.has_value());
  CHECK(ter.secondary->aH == Rational(2));
  CHECK(ter.secondary->wc == std::vector<Rational>{Rational(2), Rational(2), Rational(-3),
                                                   Rational(0), Rational(0)});
  CHECK_THROWS_AS(preset_bundle(SpaceId::Dp1CI, "gor"), std::invalid_argument);
}

TEST_CASE("mu examples") {
  WeightSystem ws({3, 2, 1, 1});
  std::vector<std::string> names{"w", "z", "x", "y"};
  HypersurfaceFamily fam(ws, 6, parse_wpoly("w^2 + z^3 + x^6 + y^6", ws, names, 6));
  LineBundleSpec d0 = preset_bundle(SpaceId::Sextic3211, "delta0");
  OneParamSubgroup rho({2, 1, 0, 1});
  long m = mult(fam.F, rho);
  HMKValue v = mu(AnyFamily(fam), rho, d0);
  CHECK(v.first == Rational(48 * m - 32 * 2 - 36 * 1 - 60 * (0 + 1)));

  CIFamily ci(kDp1, 6, 3, dp1("w^2 + z^3 + x^6 + y^6", 6), dp1("s", 3));
  LineBundleSpec bal = preset_bundle(SpaceId::Dp1CI, "bal");
  HMKValue b = mu_reduced(AnyFamily(ci), OneParamSubgroup({0, 1, 0, 0, 0}), bal);
  CHECK(b.first == Rational(0));
  CHECK(!b.second.has_value());
}

TEST_CASE("mu rejects a CI bundle on a hypersurface family") {
  WeightSystem ws({3, 2, 1, 1});
  std::vector<std::string> names{"w", "z", "x", "y"};
  HypersurfaceFamily fam(ws, 6, parse_wpoly("w^2 + z^3 + x^6 + y^6", ws, names, 6));
  LineBundleSpec d0 = preset_bundle(SpaceId::Dp1CI, "delta0");
  CHECK_THROWS_AS(mu(AnyFamily(fam), OneParamSubgroup({1, 0, 0, 0}), d0), std::invalid_argument);
}

TEST_CASE("additivity of mu in the bundle") {
  std::mt19937_64 rng(31);
  WeightSystem ws({3, 2, 1, 1});
  int done = 0;
  while (done < 50) {
    WPoly f = rnd_poly(rng, ws, 6, 2);
    if (f.is_zero()) continue;
    HypersurfaceFamily fam(ws, 6, f.normalize_t());
    OneParamSubgroup rho = rnd_rho(rng, 4, 3);
    LineBundleSpec d1 = preset_bundle(SpaceId::Sextic3211, "delta1");
    LineBundleSpec d2 = preset_bundle(SpaceId::Sextic3211, "delta2");
    LineBundleSpec sum{"sum", d1.primary + d2.primary, std::nullopt};
    CHECK(mu(AnyFamily(fam), rho, sum).first ==
          mu(AnyFamily(fam), rho, d1).first + mu(AnyFamily(fam), rho, d2).first);
    ++done;
  }
}

TEST_CASE("rho_irr shift invariance for effective bundles") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 50) {
    WPoly F = rnd_poly(rng, kDp1, 6, 2), H = rnd_poly(rng, kDp1, 3, 2);
    if (F.is_zero() || H.is_zero()) continue;
    F = F.normalize_t();
    H = H.normalize_t();
    std::optional<CIFamily> fam;
    try {
      fam.emplace(kDp1, 6, 3, F, H);
    } catch (const std::invalid_argument&) {
      continue;
    }
    OneParamSubgroup rho = rnd_rho(rng, 5, 2);
    std::vector<int> shifted = rho.w;
    for (int i = 0; i < 5; ++i) shifted[static_cast<size_t>(i)] += 2 * kDp1.weight(i);
    LineBundleSpec bal = preset_bundle(SpaceId::Dp1CI, "bal");
    CHECK(mu_reduced(AnyFamily(*fam), rho, bal).first ==
          mu_reduced(AnyFamily(*fam), OneParamSubgroup(shifted), bal).first);
    ++done;
  }
}

TEST_CASE("mu vanishes on the trivial subgroup") {
  WPoly F = dp1("w^2 + z^3 + x^6 + y^6", 6);
  CIFamily ci(kDp1, 6, 3, F, dp1("s", 3));
  LineBundleSpec ter = preset_bundle(SpaceId::Dp1CI, "ter");
  HMKValue v = mu_reduced(AnyFamily(ci), OneParamSubgroup({0, 0, 0, 0, 0}), ter);
  CHECK(v.first == Rational(0));
  REQUIRE(v.second.has_value());
  CHECK(*v.second == Rational(0));
}

TEST_CASE("HMKValue lexicographic order") {
  HMKValue a{Rational(0), Rational(1)};
  HMKValue b{Rational(0), Rational(-1)};
  HMKValue c{Rational(1), std::nullopt};
  CHECK(a.positive());
  CHECK(!b.positive());
  CHECK(c.positive());
  CHECK(b < a);
  CHECK(a < c);
}
