#include "doctest.h"

#include "bicomplex/errors.hpp"
#include "bicomplex/variational/operators.hpp"
#include "support/oracles.hpp"

using namespace bicomplex::variational;
using bicomplex::Error;
using bicomplex::ErrorCode;
using bicomplex::jetforms::ContactGen;
using bicomplex::jetforms::wedge;
namespace symcore = bicomplex::symcore;
using bicomplex::symcore::Rational;

namespace {

const Chart kX({"x"}, {"u"});
const Chart kUV({"x"}, {"u", "v"});
const Chart kTX({"t", "x"}, {"u"});

Poly var(const VarRef& v) { return Poly::variable(v); }
Form w(const VarRef& v) { return Form::omega(v); }

Form with_eta(const Form& f, const Chart& c) { return wedge(f, Form::volume(c)); }

}  // namespace

TEST_CASE("interior_euler examples") {
  const VarRef ux = kX.z(0, "x");
  const FunctionalForm harmonic = interior_euler(with_eta(w(ux), kX).times(var(ux)), kX);
  CHECK(harmonic.components(1) == std::vector<Poly>{-var(kX.z(0, "xx"))});

  const Form source = with_eta(w(kX.y(0)), kX).times(var(ux));
  CHECK(interior_euler(source, kX).form() == source);

  const Form two = with_eta(wedge(w(kUV.y(0)), w(kUV.y(1))), kUV);
  const FunctionalForm i2 = interior_euler(two, kUV);
  CHECK(i2.form() == two);
  CHECK(i2.degree() == 2);
}

TEST_CASE("interior_euler rejects bad bidegrees") {
  const Form mixed = Form::dx(0) + w(kTX.y(0));
  CHECK_THROWS_AS(interior_euler(mixed, kTX), Error);
  CHECK_THROWS_AS(interior_euler(Form::volume(kTX), kTX), Error);
  CHECK_THROWS_AS(interior_euler(wedge(Form::dx(0), w(kTX.y(0))), kTX), Error);
  try {
    interior_euler(Form::volume(kTX), kTX);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BidegreeError);
  }
  CHECK(interior_euler(Form(), kTX).is_zero());
}

TEST_CASE("vertical_homotopy examples") {
  const Poly y = var(kX.y(0));
  const Form eta = Form::volume(kX);
  const Form input = with_eta(w(kX.y(0)), kX).times(y);
  const Form h = vertical_homotopy(input);
  CHECK(h == eta.times(y.pow(2).scaled(Rational(1, 2))));
  CHECK(bicomplex::jetforms::d_V(h) == input);

  const Form two = with_eta(wedge(w(kUV.y(0)), w(kUV.y(1))), kUV);
  const Form expected =
      with_eta(w(kUV.y(1)).times(var(kUV.y(0))) - w(kUV.y(0)).times(var(kUV.y(1))), kUV)
          .times(Poly(Rational(1, 2)));
  CHECK(vertical_homotopy(two) == expected);
  CHECK(bicomplex::jetforms::d_V(vertical_homotopy(two)) == two);
  CHECK_THROWS_AS(vertical_homotopy(Form::volume(kX)), Error);
}

TEST_CASE("vertical_decompose examples") {
  const Poly y1 = var(kUV.y(0));
  const Poly y2 = var(kUV.y(1));
  const Form closed = with_eta(w(kUV.y(0)), kUV).times(y1.pow(2));
  const VerticalSplit a = vertical_decompose(closed);
  CHECK(a.exact_part == closed);
  CHECK(a.complement.is_zero());

  const Form omega = with_eta(w(kUV.y(0)), kUV).times(y2);
  const VerticalSplit b = vertical_decompose(omega);
  CHECK(b.exact_part ==
        with_eta(w(kUV.y(0)).times(y2) + w(kUV.y(1)).times(y1), kUV).times(Rational(1, 2)));
  CHECK(b.complement ==
        with_eta(w(kUV.y(0)).times(y2) - w(kUV.y(1)).times(y1), kUV).times(Rational(1, 2)));
  CHECK(b.exact_part + b.complement == omega);
}

TEST_CASE("euler_lagrange examples") {
  const Poly ux = var(kX.z(0, "x"));
  const Poly u = var(kX.y(0));
  const Poly uxx = var(kX.z(0, "xx"));
  CHECK(euler_lagrange(ux.pow(2).scaled(Rational(1, 2)), kX).components(1) ==
        std::vector<Poly>{-uxx});
  CHECK(euler_lagrange(u.pow(2).scaled(Rational(1, 2)), kX).components(1) ==
        std::vector<Poly>{u});
  CHECK(euler_lagrange(uxx.pow(2).scaled(Rational(1, 2)), kX).components(1) ==
        std::vector<Poly>{var(kX.z(0, "xxxx"))});
}

TEST_CASE("euler_lagrange with a density") {
  const Chart weighted({"t", "x"}, {"u"}, Poly(1) + Poly::variable(VarRef::base(1)).pow(2));
  const Poly l = var(weighted.z(0, "x")).pow(2) * var(weighted.y(0)) +
                 var(weighted.z(0, "t")).scaled(3);
  CHECK(euler_lagrange(l, weighted).components(1) ==
        bicomplex::testing::euler_oracle(l, weighted));
}

TEST_CASE("delta_V examples") {
  const Poly ux = var(kX.z(0, "x"));
  CHECK(delta_V(euler_lagrange(ux.pow(2).scaled(Rational(1, 2)), kX), kX).is_zero());

  // Burgers: K = (u w_t + (-(u^2/2) - u_x) w_x) ^ eta.
  const Poly u = var(kTX.y(0));
  const Poly flux = -(u.pow(2).scaled(Rational(1, 2)) + var(kTX.z(0, "x")));
  const Form k = with_eta(w(kTX.z(0, "t")).times(u) + w(kTX.z(0, "x")).times(flux), kTX);
  CHECK_FALSE(delta_V(interior_euler(k, kTX), kTX).is_zero());

  const FunctionalForm fake(with_eta(w(kTX.z(0, "t")), kTX), 2, 1);
  CHECK_THROWS_AS(delta_V(fake, kTX), Error);
}

TEST_CASE("higher_balance_residual examples") {
  HigherBalanceData fourth{kX, {{{0, MultiIndex(1, {2})}, var(kX.z(0, "xx"))}}};
  CHECK(higher_balance_residual(fourth) == std::vector<Poly>{-var(kX.z(0, "xxxx"))});

  const Poly u = var(kTX.y(0));
  const Poly ft = u;
  const Poly fx = -u.pow(2);
  const Poly source = u.scaled(3);
  HigherBalanceData first{kTX,
                          {{{0, kTX.unit(0)}, ft}, {{0, kTX.unit(1)}, fx}, {{0, MultiIndex(2)}, source}}};
  const Poly expected = symcore::total_derivative(ft, 0) + symcore::total_derivative(fx, 1) - source;
  CHECK(higher_balance_residual(first) == std::vector<Poly>{expected});

  HigherBalanceData empty{kTX, {}};
  CHECK(higher_balance_residual(empty) == std::vector<Poly>{Poly()});
}

TEST_CASE("higher_balance_form components are the negated residuals") {
  const Chart weighted({"x"}, {"u"}, Poly::variable(VarRef::base(0)) + Poly(2));
  const Poly u = var(weighted.y(0));
  HigherBalanceData data{weighted,
                         {{{0, MultiIndex(1, {2})}, u * var(weighted.z(0, "x"))},
                          {{0, MultiIndex(1, {3})}, u.pow(2)},
                          {{0, MultiIndex(1, {1})}, var(weighted.z(0, "xx"))},
                          {{0, MultiIndex(1)}, u}}};
  const auto components =
      interior_euler(higher_balance_form(data), weighted).components(1);
  const auto residual = higher_balance_residual(data);
  CHECK(components[0] == -residual[0]);
}

TEST_CASE("divergence_split examples") {
  const Poly u = var(kTX.y(0));
  const Poly ut = var(kTX.z(0, "t"));
  const Poly ux = var(kTX.z(0, "x"));
  const Poly uxx = var(kTX.z(0, "xx"));
  const Poly kdv = (u * ut).scaled(Rational(1, 2)) + u.pow(2) * ux +
                   (ux * uxx).scaled(Rational(1, 2));
  const DivergenceSplit split = divergence_split(kdv, 2);
  CHECK(split.flux[0] == u.pow(2).scaled(Rational(1, 4)));
  CHECK(split.flux[1] == ux.pow(2).scaled(Rational(1, 4)) + u.pow(3).scaled(Rational(1, 3)));
  CHECK(split.remainder.is_zero());
  CHECK(split.base.is_zero());

  const Poly burgers = (u * ut).scaled(Rational(1, 2)) -
                       (u.pow(2) * ux).scaled(Rational(1, 6)) - ux.pow(2).scaled(Rational(1, 2));
  const DivergenceSplit b = divergence_split(burgers, 2);
  CHECK(b.flux[0] == u.pow(2).scaled(Rational(1, 4)));
  CHECK(b.flux[1] == -u.pow(3).scaled(Rational(1, 18)) - (u * ux).scaled(Rational(1, 2)));
  CHECK(b.remainder == (u * uxx).scaled(Rational(1, 2)));
}
