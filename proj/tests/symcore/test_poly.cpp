#include "doctest.h"

#include "bicomplex/symcore/chart.hpp"
#include "bicomplex/symcore/poly.hpp"
#include "support/generators.hpp"

using namespace bicomplex::symcore;
using bicomplex::testing::Gen;
using bicomplex::testing::PolyShape;

namespace {

const Chart kTX({"t", "x"}, {"u"});
const Poly u = Poly::variable(kTX.y(0));
const Poly u_x = Poly::variable(kTX.z(0, "x"));
const Poly x = Poly::variable(kTX.x(1));

}  // namespace

TEST_CASE("poly_arith examples") {
  CHECK(u + u == u.scaled(2));
  CHECK((u + 1) * (u - 1) == u.pow(2) - 1);
  CHECK((u * u_x + x).pow(0) == Poly(1));
  CHECK((u * u_x) * Poly() == Poly());
  CHECK((u - u).is_zero());
}

TEST_CASE("no zero coefficients and canonical order") {
  const Poly p = u.pow(2) + u_x * x - u.pow(2) + Poly(3);
  CHECK(p.size() == 2);
  for (const Term& t : p.terms()) CHECK_FALSE(t.coeff.is_zero());
  CHECK(to_text(p, kTX) == "x u_x + 3");
}

TEST_CASE("monomial bookkeeping") {
  const Poly p = x.pow(2) * u * Poly::variable(kTX.z(0, "tx"));
  const Monomial& mono = p.leading().monomial;
  CHECK(mono.degree() == 4);
  CHECK(mono.vertical_degree() == 2);
  CHECK(mono.jet_order() == 2);
  CHECK(p.jet_order() == 2);
}

TEST_CASE("ring laws hold on random polynomials") {
  Gen gen(11);
  PolyShape shape{.n = 2, .m = 2, .max_order = 2, .max_degree = 3, .max_terms = 5};
  for (int k = 0; k < 100; ++k) {
    const Poly a = gen.poly(shape);
    const Poly b = gen.poly(shape);
    const Poly c = gen.poly(shape);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Poly());
  }
}

TEST_CASE("exact division") {
  const Poly rho = x + 1;
  const Poly p = (u * u_x + x.pow(2)) * rho;
  const auto q = try_divide(p, rho);
  REQUIRE(q.has_value());
  CHECK(*q == u * u_x + x.pow(2));
  CHECK_FALSE(try_divide(p + u, rho).has_value());
}
