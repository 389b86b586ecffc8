#include "doctest.h"

#include "bicomplex/errors.hpp"
#include "bicomplex/symcore/chart.hpp"

using namespace bicomplex::symcore;
using bicomplex::Error;

TEST_CASE("chart validation") {
  CHECK_THROWS_AS(Chart({}, {"u"}), Error);
  CHECK_THROWS_AS(Chart({"t"}, {}), Error);
  CHECK_THROWS_AS(Chart({"t", "t"}, {"u"}), Error);
  CHECK_THROWS_AS(Chart({"t"}, {"t"}), Error);
  CHECK_THROWS_AS(Chart({"t_1"}, {"u"}), Error);
  CHECK_THROWS_AS(Chart({"t"}, {"density"}), Error);
  CHECK_THROWS_AS(Chart({"d"}, {"u"}), Error);
  CHECK_NOTHROW(Chart({"t", "X"}, {"v", "F"}));
  CHECK_THROWS_AS(Chart({"t"}, {"u"}, Poly()), Error);
  CHECK_THROWS_AS(Chart({"t"}, {"u"}, Poly::variable(VarRef::field(0, 1))), Error);
  CHECK_THROWS_AS(Chart({"a", "b", "c", "d1", "e", "f", "g", "h", "i"}, {"u"}), Error);
  CHECK_NOTHROW(Chart({"t", "x"}, {"u"}, Poly::variable(VarRef::base(1))));
}

TEST_CASE("jet variable names") {
  const Chart c({"t", "x"}, {"u", "v"});
  CHECK(c.var_name(c.z(1, "tx")) == "v_tx");
  CHECK(c.var_name(c.z(0, "xxt")) == "u_txx");
  CHECK(c.var_name(c.y(0)) == "u");
  CHECK(c.var_name(c.x(1)) == "x");
  CHECK(c.var_latex(c.z(0, "tx")) == "u_{tx}");
}

TEST_CASE("multi-letter coordinates") {
  const Chart c({"xi", "eta"}, {"u", "v"});
  CHECK(c.var_name(c.z(0, "xi")) == "u_xi");
  CHECK(c.var_name(c.z(1, "etaxi")) == "v_xieta");
  CHECK(c.var_latex(c.z(1, "eta")) == "v_{\\eta}");
}

TEST_CASE("ambiguous suffixes fall back to the numeric form") {
  const Chart c({"a", "aa"}, {"u"});
  CHECK(c.decompose_suffix("aa").size() == 2);
  CHECK(c.var_name(VarRef::jet(0, MultiIndex(2, {2, 0}))) == "d(u;2,0)");
  CHECK(c.var_name(VarRef::jet(0, MultiIndex(2, {0, 1}))) == "d(u;0,1)");
  CHECK_THROWS_AS(c.z(0, "aa"), Error);
}

TEST_CASE("poly text and latex") {
  const Chart c({"t", "x"}, {"u"});
  const Poly u = Poly::variable(c.y(0));
  const Poly p = (u * Poly::variable(c.z(0, "t"))).scaled(Rational(1, 2)) -
                 (u.pow(2) * Poly::variable(c.z(0, "x"))).scaled(Rational(1, 6)) -
                 Poly(1);
  CHECK(to_text(p, c) == "-1/6 u^2 u_x + 1/2 u u_t - 1");
  CHECK(to_latex(p, c) == "-\\frac{1}{6} u^{2} u_{x} + \\frac{1}{2} u u_{t} - 1");
  CHECK(to_text(Poly(), c) == "0");
}
