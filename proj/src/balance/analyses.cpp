#include "bicomplex/balance/analyses.hpp"

#include <algorithm>
#include <string>

namespace bicomplex::balance {

using jetforms::wedge;

namespace {

Poly pairing(const BalanceSystem& bs) {
  const Chart& c = bs.chart();
  Poly out;
  for (std::size_t i = 0; i < bs.m(); ++i) {
    out += Poly::variable(c.y(i)) * bs.source(i);
    for (std::size_t mu = 0; mu < bs.n(); ++mu) {
      out += Poly::variable(c.z(i, c.unit(mu))) * bs.flux(i, mu);
    }
  }
  return out;
}

Poly dy(const Poly& p, const Chart& chart, std::size_t j) {
  return symcore::partial(p, chart.y(j));
}

}  // namespace

Form build_K(const BalanceSystem& bs) {
  const Chart& c = bs.chart();
  Form k;
  for (std::size_t i = 0; i < bs.m(); ++i) {
    for (std::size_t mu = 0; mu < bs.n(); ++mu) {
      k += Form::omega(c.z(i, c.unit(mu))).times(bs.flux(i, mu));
    }
    k += Form::omega(c.y(i)).times(bs.source(i));
  }
  return wedge(k, Form::volume(c));
}

std::vector<Poly> balance_residuals(const BalanceSystem& bs) {
  const Poly& rho = bs.chart().rho();
  std::vector<Poly> out(bs.m());
  for (std::size_t i = 0; i < bs.m(); ++i) {
    for (std::size_t mu = 0; mu < bs.n(); ++mu) {
      out[i] += symcore::total_derivative(bs.flux(i, mu) * rho, mu);
    }
    out[i] -= bs.source(i) * rho;
  }
  return out;
}

FunctionalForm source_form(const BalanceSystem& bs) {
  return variational::interior_euler(build_K(bs), bs.chart());
}

Poly quasi_lagrangian(const BalanceSystem& bs) {
  return symcore::scale_integrate(pairing(bs), -1);
}

HelmholtzResult helmholtz(const BalanceSystem& bs) {
  HelmholtzResult out;
  out.residual = jetforms::d(build_K(bs), bs.n());
  out.closed = out.residual.is_zero();
  if (out.closed) out.lagrangian = quasi_lagrangian(bs);
  return out;
}

KSplit k_decompose(const BalanceSystem& bs) {
  const Form k = build_K(bs);
  const variational::VerticalSplit split = variational::vertical_decompose(k);
  return {split.exact_part, split.complement};
}

FSplit f_split(const BalanceSystem& bs) {
  const KSplit k = k_decompose(bs);
  return {variational::interior_euler(k.nlag, bs.chart()),
          variational::euler_lagrange(quasi_lagrangian(bs), bs.chart())};
}

TrivialCheck trivial_quasi_lagrangian_check(const BalanceSystem& bs) {
  const Poly p = pairing(bs);
  return {symcore::vertical_part(p).is_zero(), symcore::base_part(p)};
}

DecompositionReport decompose(const BalanceSystem& bs) {
  DecompositionReport out;
  out.quasi_lagrangian = quasi_lagrangian(bs);
  const KSplit k = k_decompose(bs);
  out.k_lag = k.lag;
  out.k_nlag = k.nlag;
  out.el_of_ltilde = variational::euler_lagrange(out.quasi_lagrangian, bs.chart());
  out.godunov_part = variational::interior_euler(k.nlag, bs.chart());
  out.helmholtz_closed = helmholtz(bs).closed;
  out.trivial_quasi_lagrangian = trivial_quasi_lagrangian_check(bs).is_trivial;
  return out;
}

GodunovReport godunov_check(const BalanceSystem& bs) {
  const Chart& c = bs.chart();
  GodunovReport out;
  out.is_zero_order = bs.order() == 0;
  if (!out.is_zero_order) out.error = ErrorCode::OrderTooHigh;
  bool all_symmetric = true;
  for (std::size_t mu = 0; mu < bs.n(); ++mu) {
    bool symmetric = true;
    for (std::size_t i = 0; i < bs.m() && symmetric; ++i) {
      for (std::size_t k = i + 1; k < bs.m() && symmetric; ++k) {
        symmetric = dy(bs.flux(i, mu), c, k) == dy(bs.flux(k, mu), c, i);
      }
    }
    out.flux_symmetric.push_back(symmetric);
    all_symmetric = all_symmetric && symmetric;
    std::optional<Poly> potential;
    if (symmetric && out.is_zero_order) {
      Poly g;
      for (std::size_t i = 0; i < bs.m(); ++i) g += Poly::variable(c.y(i)) * bs.flux(i, mu);
      g = symcore::scale_integrate(g, -1);
      for (std::size_t i = 0; i < bs.m(); ++i) {
        if (!(dy(g, c, i) == bs.flux(i, mu))) {
          throw Error(ErrorCode::InternalInvariant, "recovered potential does not reproduce the flux");
        }
      }
      potential = std::move(g);
    }
    out.potentials.push_back(std::move(potential));
  }
  for (std::size_t i = 0; i < bs.m(); ++i) out.source_pairing += Poly::variable(c.y(i)) * bs.source(i);
  if (out.source_pairing.is_constant()) out.pairing_constant = out.source_pairing.constant_value();
  out.verdict = out.is_zero_order && all_symmetric && out.pairing_constant.has_value();
  return out;
}

std::vector<Rational> leading_minors(const std::vector<std::vector<Rational>>& a) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    std::vector<std::vector<Rational>> b(k);
    for (std::size_t r = 0; r < k; ++r) b[r].assign(a[r].begin(), a[r].begin() + static_cast<std::ptrdiff_t>(k));
    Rational det(1);
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      while (pivot < k && b[pivot][col].is_zero()) ++pivot;
      if (pivot == k) {
        det = Rational(0);
        break;
      }
      if (pivot != col) {
        std::swap(b[pivot], b[col]);
        det = -det;
      }
      det = det * b[col][col];
      for (std::size_t r = col + 1; r < k; ++r) {
        const Rational f = b[r][col] / b[col][col];
        for (std::size_t c2 = col; c2 < k; ++c2) b[r][c2] = b[r][c2] - f * b[col][c2];
      }
    }
    out.push_back(det);
  }
  return out;
}

HyperbolicityReport symmetric_hyperbolicity(const BalanceSystem& bs,
                                            const std::vector<Rational>& point) {
  if (bs.order() != 0) {
    throw Error(ErrorCode::OrderTooHigh, "symmetric hyperbolicity needs a system of order zero");
  }
  const Chart& c = bs.chart();
  if (point.size() != bs.n() + bs.m()) {
    throw Error(ErrorCode::InvalidArgument,
                "point needs " + std::to_string(bs.n() + bs.m()) + " coordinates (base, then fields)");
  }
  HyperbolicityReport out;
  out.point = point;
  const Poly lt = quasi_lagrangian(bs);
  for (std::size_t mu = 0; mu < bs.n(); ++mu) {
    std::vector<std::vector<Poly>> m(bs.m(), std::vector<Poly>(bs.m()));
    for (std::size_t i = 0; i < bs.m(); ++i) {
      const Poly ft = bs.flux(i, mu) - symcore::partial(lt, c.z(i, c.unit(mu)));
      for (std::size_t j = 0; j < bs.m(); ++j) m[i][j] = dy(ft, c, j);
    }
    bool symmetric = true;
    for (std::size_t i = 0; i < bs.m(); ++i) {
      for (std::size_t j = i + 1; j < bs.m(); ++j) symmetric = symmetric && m[i][j] == m[j][i];
    }
    out.symmetric.push_back(symmetric);
    out.matrices.push_back(std::move(m));
  }
  const auto value_of = [&](const VarRef& v) -> std::optional<Rational> {
    if (v.is_base()) return point[v.index()];
    if (v.lambda().order() == 0) return point[bs.n() + v.index()];
    return std::nullopt;
  };
  std::vector<std::vector<Rational>> m0(bs.m(), std::vector<Rational>(bs.m()));
  for (std::size_t i = 0; i < bs.m(); ++i) {
    for (std::size_t j = 0; j < bs.m(); ++j) {
      m0[i][j] = symcore::evaluate_exact(out.matrices[0][i][j], value_of);
    }
  }
  out.leading_minors = leading_minors(m0);
  bool positive = true;
  for (const Rational& r : out.leading_minors) {
    if (r.is_zero()) out.status = HyperbolicityStatus::SingularPoint;
    positive = positive && r.sign() > 0;
  }
  const bool all_symmetric =
      std::all_of(out.symmetric.begin(), out.symmetric.end(), [](bool b) { return b; });
  out.verdict = all_symmetric && positive;
  return out;
}

Poly evaluate_on_section(const Poly& p, const std::vector<Poly>& section) {
  for (const Poly& s : section) {
    if (s.has_vertical()) {
      throw Error(ErrorCode::InvalidArgument, "section components may use base variables only");
    }
  }
  return symcore::substitute(p, [&](const VarRef& v) -> std::optional<Poly> {
    if (v.is_base()) return std::nullopt;
    if (v.index() >= section.size()) {
      throw Error(ErrorCode::InvalidArgument, "section has no component for a field in use");
    }
    return symcore::total_derivative(section[v.index()], v.lambda());
  });
}

}  // namespace bicomplex::balance
