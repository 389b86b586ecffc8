#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bicomplex/jetforms/form.hpp"

namespace bicomplex::balance {

using jetforms::Form;
using symcore::Chart;
using symcore::MultiIndex;
using symcore::Poly;
using symcore::Rational;
using symcore::VarRef;

/// Balance system d_mu(F^mu_i rho) = Pi_i rho on a chart.
class BalanceSystem {
 public:
  /// flux[i][mu] = F^mu_i, source[i] = Pi_i. Throws InvalidArgument on shape
  /// mismatch, foreign variables, or a declared order below the actual one.
  BalanceSystem(Chart chart, std::vector<std::vector<Poly>> flux, std::vector<Poly> source,
                std::optional<unsigned> declared_order = std::nullopt);

  static BalanceSystem zero(const Chart& chart);
  /// F^mu_i = dL/dz^i_mu, Pi_i = dL/dy^i.
  static BalanceSystem from_lagrangian(const Chart& chart, const Poly& lagrangian);

  const Chart& chart() const { return chart_; }
  std::size_t n() const { return chart_.n(); }
  std::size_t m() const { return chart_.m(); }
  const Poly& flux(std::size_t i, std::size_t mu) const { return flux_[i][mu]; }
  const Poly& source(std::size_t i) const { return source_[i]; }
  /// Max jet order over all fluxes and sources.
  unsigned order() const { return order_; }

 private:
  Chart chart_;
  std::vector<std::vector<Poly>> flux_;
  std::vector<Poly> source_;
  unsigned order_ = 0;
};

/// Throws InvalidArgument when p uses a variable outside the chart.
void check_variables(const Poly& p, const Chart& chart, const char* what);

}  // namespace bicomplex::balance
