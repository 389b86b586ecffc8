#include "bicomplex/variational/operators.hpp"

#include <set>

#include "bicomplex/errors.hpp"

namespace bicomplex::variational {

using jetforms::Basis;
using jetforms::ContactGen;
using symcore::Rational;

namespace {

std::vector<std::size_t> volume_dx(std::size_t n) {
  std::vector<std::size_t> dx(n);
  for (std::size_t mu = 0; mu < n; ++mu) dx[mu] = mu;
  return dx;
}

// Contact degree s of a form that must be homogeneous of some (r, s);
// nullopt for the zero form.
std::optional<jetforms::Bidegree> checked_bidegree(const Form& w, const char* op) {
  if (w.is_zero()) return std::nullopt;
  const auto bd = w.bidegree();
  if (!bd) throw Error(ErrorCode::BidegreeError, std::string(op) + " needs a homogeneous form");
  if (bd->second == 0) {
    throw Error(ErrorCode::BidegreeError, std::string(op) + " needs contact degree >= 1");
  }
  return bd;
}

}  // namespace

FunctionalForm::FunctionalForm(Form form, std::size_t n, std::size_t s)
    : form_(std::move(form)), n_(n), s_(s) {}

FunctionalForm FunctionalForm::from_components(const std::vector<Poly>& components,
                                               std::size_t n) {
  Form out;
  const bool flip = n % 2 == 1;
  for (std::size_t i = 0; i < components.size(); ++i) {
    // w^i ^ dx-volume = (-1)^n dx-volume ^ w^i
    out += Form::term(flip ? -components[i] : components[i], volume_dx(n),
                      {ContactGen{i, MultiIndex(n)}});
  }
  return FunctionalForm(std::move(out), n, 1);
}

std::vector<Poly> FunctionalForm::components(std::size_t m) const {
  if (s_ != 1) throw Error(ErrorCode::BidegreeError, "components are defined for degree 1");
  std::vector<Poly> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Poly c = form_.coefficient(Basis{volume_dx(n_), {ContactGen{i, MultiIndex(n_)}}});
    out[i] = n_ % 2 == 1 ? -c : c;
  }
  return out;
}

FunctionalForm interior_euler(const Form& w, const Chart& chart) {
  const std::size_t n = chart.n();
  const auto bd = checked_bidegree(w, "interior Euler operator");
  if (!bd) return FunctionalForm(Form(), n, 1);
  if (bd->first != n) {
    throw Error(ErrorCode::BidegreeError, "interior Euler operator needs horizontal degree n");
  }
  const std::size_t s = bd->second;

  std::set<ContactGen> present;
  for (const auto& [basis, coeff] : w.terms()) present.insert(basis.omega.begin(), basis.omega.end());

  Form sum;
  for (const ContactGen& g : present) {
    Form inner = jetforms::total_derivative_form(jetforms::contract(w, g.var()), g.lambda);
    if (g.lambda.order() % 2 == 1) inner = -inner;
    sum += jetforms::wedge(Form::omega(g.field, MultiIndex(n)), inner);
  }
  if (s > 1) sum = sum.times(Poly(Rational(1, static_cast<long>(s))));
  return FunctionalForm(std::move(sum), n, s);
}

Form vertical_homotopy(const Form& w) {
  const auto bd = checked_bidegree(w, "vertical homotopy");
  if (!bd) return Form();
  const int s = static_cast<int>(bd->second);
  Form out;
  for (const auto& [basis, coeff] : w.terms()) {
    const Poly weighted = symcore::scale_integrate(coeff, s - 1);
    for (std::size_t a = 0; a < basis.omega.size(); ++a) {
      std::vector<ContactGen> omega = basis.omega;
      const VarRef z = omega[a].var();
      omega.erase(omega.begin() + static_cast<std::ptrdiff_t>(a));
      Poly c = weighted * Poly::variable(z);
      if ((basis.s() + a) % 2 == 1) c = -c;
      out += Form::term(std::move(c), basis.dx, std::move(omega));
    }
  }
  return out;
}

VerticalSplit vertical_decompose(const Form& w) {
  checked_bidegree(w, "vertical decomposition");
  return {jetforms::d_V(vertical_homotopy(w)), vertical_homotopy(jetforms::d_V(w))};
}

FunctionalForm euler_lagrange(const Poly& lagrangian, const Chart& chart) {
  return interior_euler(jetforms::d_V(Form::volume(chart).times(lagrangian)), chart);
}

bool is_functional(const Form& w, const Chart& chart) {
  return interior_euler(w, chart).form() == w;
}

FunctionalForm delta_V(const FunctionalForm& f, const Chart& chart) {
  if (!is_functional(f.form(), chart)) {
    throw Error(ErrorCode::NotFunctional, "form is not fixed by the interior Euler operator");
  }
  return interior_euler(jetforms::d_V(f.form()), chart);
}

std::vector<Poly> higher_balance_residual(const HigherBalanceData& data) {
  const Chart& chart = data.chart;
  std::vector<Poly> out(chart.m());
  for (const auto& [key, coeff] : data.coefficients) {
    const auto& [i, sigma] = key;
    if (i >= chart.m()) throw Error(ErrorCode::InvalidArgument, "field index out of range");
    const Poly weighted = coeff * chart.rho();
    if (sigma.order() == 0) {
      out[i] -= weighted;
      continue;
    }
    const Poly term = symcore::total_derivative(weighted, sigma);
    if (sigma.order() % 2 == 1) {
      out[i] += term;
    } else {
      out[i] -= term;
    }
  }
  return out;
}

Form higher_balance_form(const HigherBalanceData& data) {
  const Form eta = Form::volume(data.chart);
  Form out;
  for (const auto& [key, coeff] : data.coefficients) {
    out += jetforms::wedge(Form::omega(key.first, key.second), eta).times(coeff);
  }
  return out;
}

DivergenceSplit divergence_split(const Poly& p, std::size_t n) {
  DivergenceSplit out;
  out.base = symcore::base_part(p);
  out.flux.assign(n, Poly());
  Poly pairing;  // sum_i y^i E_i(p)
  for (const VarRef& v : p.variables()) {
    if (!v.is_jet()) continue;
    // A d_J y = d_mu(A d_{J-mu} y) - (d_mu A) d_{J-mu} y, repeated until J = 0.
    Poly a = symcore::partial(p, v);
    MultiIndex j = v.lambda();
    while (j.order() > 0) {
      std::size_t mu = 0;
      while (j[mu] == 0) ++mu;
      j = j.lowered(mu);
      out.flux[mu] += a * Poly::variable(VarRef::jet(v.index(), j));
      a = -symcore::total_derivative(a, mu);
    }
    pairing += a * Poly::variable(VarRef::jet(v.index(), j));
  }
  for (Poly& f : out.flux) f = symcore::scale_integrate(f, -1);
  out.remainder = symcore::scale_integrate(pairing, -1);
  return out;
}

}  // namespace bicomplex::variational
