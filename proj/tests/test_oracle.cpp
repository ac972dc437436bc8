#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpstab/pic.hpp"

#include <random>

using namespace dpstab;

namespace {

const WeightSystem kBin({1, 1});
const std::vector<std::string> kXY{"x", "y"};

HypersurfaceFamily quartic(const std::string& text) {
  return HypersurfaceFamily(kBin, 4, parse_wpoly(text, kBin, kXY, 4));
}

}  // namespace

TEST_CASE("binary quartic discriminant valuations") {
  CHECK(pic::discriminant_valuation_oracle(quartic("x^4 + t*y^4")) == 3);
  CHECK(pic::discriminant_valuation_oracle(quartic("x^4 + y^4")) == 0);
  CHECK_THROWS_AS(pic::discriminant_valuation_oracle(quartic("x^4")), std::domain_error);
}

TEST_CASE("oracle rejects out-of-range instances") {
  WeightSystem ws({2, 1});
  HypersurfaceFamily weighted(ws, 4, parse_wpoly("x^2 + y^4", ws, kXY, 4));
  CHECK_THROWS_AS(pic::discriminant_valuation_oracle(weighted), std::invalid_argument);
}

TEST_CASE("ternary discriminant by the Macaulay quotient") {
  WeightSystem ws({1, 1, 1});
  std::vector<std::string> names{"x", "y", "z"};
  // smooth Fermat cubic: valuation 0
  HypersurfaceFamily cubic(ws, 3, parse_wpoly("x^3 + y^3 + z^3", ws, names, 3));
  CHECK(pic::discriminant_valuation_oracle(cubic) == 0);
  // x^3 + y^3 + t z^3: discriminant gains the known z-weight
  HypersurfaceFamily degenerate(ws, 3, parse_wpoly("x^3 + y^3 + t*z^3", ws, names, 3));
  long v = pic::discriminant_valuation_oracle(degenerate);
  // disc(x^3+y^3+c z^3) ~ c^4 up to a constant (each variable enters disc with
  // weight m/n = 12/3 = 4)
  CHECK(v == 4);
  HypersurfaceFamily quartic3(ws, 4,
                              parse_wpoly("x^4 + y^4 + t*z^4 + x*y*z^2", ws, names, 4));
  CHECK(pic::discriminant_valuation_oracle(quartic3) >= 0);
}

TEST_CASE("discriminant cocycle on binary quartics") {
  // val(Disc F) - val(Disc F^rho) = mu_rho^{delta0}(F) with delta0 = (6; 12, 12)
  std::mt19937_64 rng(777);
  auto dc = pic::hmk_delta_coeffs(kBin, 4);
  LineBundleSpec d0 = LineBundleSpec::generic(kBin, dc.delta0);
  std::uniform_int_distribution<int> coeff(-3, 3), texp(0, 2), wpick(0, 3);
  int done = 0;
  while (done < 30) {
    WPoly f(2);
    for (const Monomial& m : enumerate_monomials(kBin, 4)) {
      int c = coeff(rng);
      if (c == 0) continue;
      f.add_term(m, TPoly::term(Rational(c), texp(rng)));
    }
    if (f.is_zero()) continue;
    f = f.normalize_t();
    HypersurfaceFamily fam(kBin, 4, f);
    long v0;
    try {
      v0 = pic::discriminant_valuation_oracle(fam);
    } catch (const std::domain_error&) {
      continue;  // generic fiber singular
    }
    OneParamSubgroup rho({wpick(rng), wpick(rng)});
    HypersurfaceFamily moved = transform_hyp(fam, rho);
    long v1 = pic::discriminant_valuation_oracle(moved);
    HMKValue mu_v = mu(AnyFamily(fam), rho, d0);
    CHECK(Rational(v0 - v1) == mu_v.first);
    ++done;
  }
}
