#include "doctest.h"

#include <map>
#include <set>

#include "bicomplex/balance/analyses.hpp"
#include "support/system_generators.hpp"

using namespace bicomplex::balance;
using bicomplex::jetforms::ContactGen;
using bicomplex::jetforms::wedge;
using bicomplex::testing::Gen;
using bicomplex::testing::PolyShape;
using bicomplex::testing::random_system;
using bicomplex::testing::random_zero_order;
namespace symcore = bicomplex::symcore;
namespace variational = bicomplex::variational;

namespace {

Poly var(const VarRef& v) { return Poly::variable(v); }

PolyShape shape_for(Gen& gen, unsigned order, unsigned degree = 3) {
  return PolyShape{.n = static_cast<std::size_t>(gen.uniform(1, 3)),
                   .m = static_cast<std::size_t>(gen.uniform(1, 3)),
                   .max_order = order,
                   .max_degree = degree,
                   .max_terms = 3};
}

std::vector<VarRef> jet_vars(const BalanceSystem& bs) {
  std::set<VarRef> out;
  for (std::size_t i = 0; i < bs.m(); ++i) {
    out.insert(bs.chart().y(i));
    for (std::size_t mu = 0; mu < bs.n(); ++mu) {
      out.insert(bs.chart().z(i, bs.chart().unit(mu)));
      for (const VarRef& v : bs.flux(i, mu).variables()) if (v.is_jet()) out.insert(v);
    }
    for (const VarRef& v : bs.source(i).variables()) if (v.is_jet()) out.insert(v);
  }
  return {out.begin(), out.end()};
}

// sum_{i,mu} y^i dP_i/dv + z^i_mu dF^mu_i/dv
Poly pairing_derivative(const BalanceSystem& bs, const VarRef& v) {
  const Chart& c = bs.chart();
  Poly out;
  for (std::size_t i = 0; i < bs.m(); ++i) {
    out += var(c.y(i)) * symcore::partial(bs.source(i), v);
    for (std::size_t mu = 0; mu < bs.n(); ++mu) {
      out += var(c.z(i, c.unit(mu))) * symcore::partial(bs.flux(i, mu), v);
    }
  }
  return out;
}

// Explicit Lagrangian part: coefficient of w^k_L ^ eta is
// int P_k(t) dt [L = 0] + int F^nu_k(t) dt [L = 1_nu] + int t dpairing/dz^k_L (t) dt.
Form lag_oracle(const BalanceSystem& bs) {
  const Chart& c = bs.chart();
  Form out;
  for (const VarRef& v : jet_vars(bs)) {
    const std::size_t k = v.index();
    Poly coeff = symcore::scale_integrate(pairing_derivative(bs, v), 0);
    if (v.lambda().order() == 0) coeff += symcore::scale_integrate(bs.source(k), 0);
    if (v.lambda().order() == 1) {
      std::size_t nu = 0;
      while (v.lambda()[nu] == 0) ++nu;
      coeff += symcore::scale_integrate(bs.flux(k, nu), 0);
    }
    out += Form::omega(v).times(coeff);
  }
  return wedge(out, Form::volume(c));
}

// Explicit non-Lagrangian part:
// int t P_{i,z^j_S}(t) dt (z^j_S w^i - y^i w^j_S)
//   + int t F^mu_{i,z^j_S}(t) dt (z^j_S w^i_mu - z^i_mu w^j_S).
Form nlag_oracle(const BalanceSystem& bs) {
  const Chart& c = bs.chart();
  Form out;
  for (std::size_t i = 0; i < bs.m(); ++i) {
    for (const VarRef& v : jet_vars(bs)) {
      const Poly a = symcore::scale_integrate(symcore::partial(bs.source(i), v), 1);
      out += (Form::omega(c.y(i)).times(var(v)) - Form::omega(v).times(var(c.y(i)))).times(a);
      for (std::size_t mu = 0; mu < bs.n(); ++mu) {
        const VarRef zi = c.z(i, c.unit(mu));
        const Poly b = symcore::scale_integrate(symcore::partial(bs.flux(i, mu), v), 1);
        out += (Form::omega(zi).times(var(v)) - Form::omega(v).times(var(zi))).times(b);
      }
    }
  }
  return wedge(out, Form::volume(c));
}

bool horizontal_coefficients(const Form& f) {
  for (const auto& [basis, coeff] : f.terms()) {
    if (!symcore::vertical_part(coeff).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Lagrangian systems are closed and return their Lagrangian") {
  Gen gen(201);
  for (int k = 0; k < 100; ++k) {
    PolyShape shape = shape_for(gen, 1, 4);
    shape.max_terms = 5;
    const Chart chart = bicomplex::testing::make_chart(shape.n, shape.m);
    const Poly l = gen.poly(shape);
    const HelmholtzResult h = helmholtz(BalanceSystem::from_lagrangian(chart, l));
    CHECK(h.closed);
    REQUIRE(h.lagrangian.has_value());
    CHECK(*h.lagrangian == l - symcore::base_part(l));
  }
}

TEST_CASE("perturbed Lagrangian systems are not closed") {
  Gen gen(203);
  for (int k = 0; k < 100; ++k) {
    PolyShape shape = shape_for(gen, 1, 4);
    const Chart chart = bicomplex::testing::make_chart(shape.n, shape.m);
    const BalanceSystem base = BalanceSystem::from_lagrangian(chart, gen.poly(shape));
    std::vector<std::vector<Poly>> flux(shape.m, std::vector<Poly>(shape.n));
    std::vector<Poly> source(shape.m);
    for (std::size_t i = 0; i < shape.m; ++i) {
      source[i] = base.source(i);
      for (std::size_t mu = 0; mu < shape.n; ++mu) flux[i][mu] = base.flux(i, mu);
    }
    // c v w_slot ^ eta with v != slot is not d_V-closed and cannot cancel
    // against a closed form.
    const auto i = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(shape.m) - 1));
    const int slot = gen.uniform(-1, static_cast<int>(shape.n) - 1);
    const VarRef slot_var = slot < 0 ? chart.y(i) : chart.z(i, chart.unit(static_cast<std::size_t>(slot)));
    VarRef v = slot_var;
    while (v == slot_var) {
      v = VarRef::jet(static_cast<std::size_t>(gen.uniform(0, static_cast<int>(shape.m) - 1)),
                      gen.multi_index(shape.n, static_cast<unsigned>(gen.uniform(0, 1))));
    }
    const Poly bump = Poly(gen.rational()) * var(v);
    if (slot < 0) {
      source[i] += bump;
    } else {
      flux[i][static_cast<std::size_t>(slot)] += bump;
    }
    CHECK_FALSE(helmholtz(BalanceSystem(chart, flux, source)).closed);
  }
}

TEST_CASE("splittings are consistent on random systems") {
  Gen gen(207);
  for (int k = 0; k < 120; ++k) {
    const BalanceSystem bs = random_system(gen, shape_for(gen, static_cast<unsigned>(gen.uniform(0, 2))));
    const Form kform = build_K(bs);
    const KSplit split = k_decompose(bs);
    CHECK(split.lag + split.nlag == kform);
    CHECK(split.lag == lag_oracle(bs));
    CHECK(split.nlag == nlag_oracle(bs));
    CHECK(horizontal_coefficients(variational::vertical_homotopy(split.nlag)));

    const FSplit f = f_split(bs);
    const auto source = source_form(bs).components(bs.m());
    const auto euler = f.euler_part.components(bs.m());
    const auto godunov = f.godunov_part.components(bs.m());
    for (std::size_t i = 0; i < bs.m(); ++i) CHECK(euler[i] + godunov[i] == source[i]);

    // Directness: a closed form has no complement, a V-image no exact part.
    CHECK(variational::vertical_decompose(split.lag).complement.is_zero());
    CHECK(variational::vertical_decompose(split.nlag).exact_part.is_zero());
  }
}

TEST_CASE("Godunov round trip") {
  Gen gen(211);
  for (int k = 0; k < 50; ++k) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto m = static_cast<std::size_t>(gen.uniform(2, 3));
    const Chart chart = bicomplex::testing::make_chart(n, m);
    std::vector<Poly> g(n);
    std::vector<std::vector<Poly>> flux(m, std::vector<Poly>(n));
    for (std::size_t mu = 0; mu < n; ++mu) {
      g[mu] = random_zero_order(gen, n, m, 4, false);
      for (std::size_t i = 0; i < m; ++i) flux[i][mu] = symcore::partial(g[mu], chart.y(i));
    }
    // Antisymmetric linear sources keep y^k P_k = 0.
    std::vector<Poly> source(m);
    const Poly c = Poly(gen.rational());
    source[0] += c * var(chart.y(1));
    source[1] -= c * var(chart.y(0));

    const GodunovReport r = godunov_check(BalanceSystem(chart, flux, source));
    CHECK(r.verdict);
    CHECK(r.pairing_constant == Rational(0));
    for (std::size_t mu = 0; mu < n; ++mu) {
      REQUIRE(r.potentials[mu].has_value());
      CHECK(*r.potentials[mu] == symcore::vertical_part(g[mu]));
      for (std::size_t i = 0; i < m; ++i) {
        CHECK(symcore::partial(*r.potentials[mu], chart.y(i)) == flux[i][mu]);
      }
    }

    // Break the symmetry of one flux Jacobian.
    auto skew = flux;
    const auto mu = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(n) - 1));
    skew[0][mu] += Poly(gen.rational()) * var(chart.y(1));
    const GodunovReport rs = godunov_check(BalanceSystem(chart, skew, source));
    CHECK_FALSE(rs.flux_symmetric[mu]);
    CHECK_FALSE(rs.verdict);

    // A source with a non-constant pairing.
    auto bad_source = source;
    bad_source[0] += Poly(gen.rational()) * var(chart.y(0)).pow(static_cast<unsigned>(gen.uniform(1, 2)));
    const GodunovReport rp = godunov_check(BalanceSystem(chart, flux, bad_source));
    CHECK_FALSE(rp.pairing_constant.has_value());
    CHECK_FALSE(rp.verdict);
  }
}

TEST_CASE("principal parts of zero-order systems") {
  Gen gen(223);
  for (int k = 0; k < 60; ++k) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto m = static_cast<std::size_t>(gen.uniform(1, 3));
    const Chart chart = bicomplex::testing::make_chart(n, m);
    std::vector<std::vector<Poly>> flux(m, std::vector<Poly>(n));
    std::vector<Poly> source(m);
    for (std::size_t i = 0; i < m; ++i) {
      source[i] = random_zero_order(gen, n, m);
      for (std::size_t mu = 0; mu < n; ++mu) flux[i][mu] = random_zero_order(gen, n, m);
    }
    const BalanceSystem bs(chart, flux, source);
    // The Lagrangian component has antisymmetric principal part.
    const auto e = variational::euler_lagrange(quasi_lagrangian(bs), chart).components(m);
    for (std::size_t mu = 0; mu < n; ++mu) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          CHECK(symcore::partial(e[i], chart.z(j, chart.unit(mu))) ==
                -symcore::partial(e[j], chart.z(i, chart.unit(mu))));
        }
      }
    }

    // Gradient fluxes give symmetric Godunov matrices.
    std::vector<std::vector<Poly>> grad(m, std::vector<Poly>(n));
    for (std::size_t mu = 0; mu < n; ++mu) {
      const Poly g = random_zero_order(gen, n, m, 4);
      for (std::size_t i = 0; i < m; ++i) grad[i][mu] = symcore::partial(g, chart.y(i));
    }
    std::vector<Rational> point;
    for (std::size_t a = 0; a < n + m; ++a) point.push_back(gen.rational());
    const HyperbolicityReport h = symmetric_hyperbolicity(BalanceSystem(chart, grad, source), point);
    for (bool s : h.symmetric) CHECK(s);
  }
}

TEST_CASE("trivial pairings have no Euler-Lagrange part") {
  Gen gen(227);
  for (int k = 0; k < 50; ++k) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 2));
    const auto m = static_cast<std::size_t>(gen.uniform(1, 3));
    const Chart chart = bicomplex::testing::make_chart(n, m);
    // Antisymmetric couplings among the slots (i, mu) and (i, source).
    std::vector<VarRef> slots;
    for (std::size_t i = 0; i < m; ++i) {
      slots.push_back(chart.y(i));
      for (std::size_t mu = 0; mu < n; ++mu) slots.push_back(chart.z(i, chart.unit(mu)));
    }
    std::map<VarRef, Poly> coeff;
    for (std::size_t a = 0; a < slots.size(); ++a) {
      for (std::size_t b = a + 1; b < slots.size(); ++b) {
        if (!gen.coin()) continue;
        const Poly c = random_zero_order(gen, n, m, 1);
        coeff[slots[a]] += c * var(slots[b]);
        coeff[slots[b]] -= c * var(slots[a]);
      }
    }
    std::vector<std::vector<Poly>> flux(m, std::vector<Poly>(n));
    std::vector<Poly> source(m);
    for (std::size_t i = 0; i < m; ++i) {
      source[i] = coeff[chart.y(i)];
      for (std::size_t mu = 0; mu < n; ++mu) flux[i][mu] = coeff[chart.z(i, chart.unit(mu))];
    }
    const BalanceSystem bs(chart, flux, source);
    REQUIRE(trivial_quasi_lagrangian_check(bs).is_trivial);
    CHECK(variational::euler_lagrange(quasi_lagrangian(bs), chart).is_zero());
    CHECK(f_split(bs).euler_part.is_zero());
  }
}
