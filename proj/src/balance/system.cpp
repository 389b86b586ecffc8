#include "bicomplex/balance/system.hpp"

#include <algorithm>
#include <string>

#include "bicomplex/errors.hpp"

namespace bicomplex::balance {

void check_variables(const Poly& p, const Chart& chart, const char* what) {
  for (const VarRef& v : p.variables()) {
    const bool ok = v.is_base() ? v.index() < chart.n()
                                : v.index() < chart.m() && v.lambda().n() == chart.n();
    if (!ok) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(what) + " uses a variable outside the chart");
    }
  }
}

BalanceSystem::BalanceSystem(Chart chart, std::vector<std::vector<Poly>> flux,
                             std::vector<Poly> source, std::optional<unsigned> declared_order)
    : chart_(std::move(chart)), flux_(std::move(flux)), source_(std::move(source)) {
  if (flux_.size() != m() || source_.size() != m()) {
    throw Error(ErrorCode::InvalidArgument, "balance system needs one row per field");
  }
  for (std::size_t i = 0; i < m(); ++i) {
    if (flux_[i].size() != n()) {
      throw Error(ErrorCode::InvalidArgument, "flux row needs one entry per base coordinate");
    }
    for (const Poly& f : flux_[i]) {
      check_variables(f, chart_, "flux");
      order_ = std::max(order_, f.jet_order());
    }
    check_variables(source_[i], chart_, "source");
    order_ = std::max(order_, source_[i].jet_order());
  }
  if (declared_order && *declared_order < order_) {
    throw Error(ErrorCode::InvalidArgument,
                "declared order " + std::to_string(*declared_order) +
                    " is below the actual order " + std::to_string(order_));
  }
}

BalanceSystem BalanceSystem::zero(const Chart& chart) {
  return BalanceSystem(chart, std::vector<std::vector<Poly>>(chart.m(), std::vector<Poly>(chart.n())),
                       std::vector<Poly>(chart.m()));
}

BalanceSystem BalanceSystem::from_lagrangian(const Chart& chart, const Poly& lagrangian) {
  check_variables(lagrangian, chart, "Lagrangian");
  std::vector<std::vector<Poly>> flux(chart.m(), std::vector<Poly>(chart.n()));
  std::vector<Poly> source(chart.m());
  for (std::size_t i = 0; i < chart.m(); ++i) {
    for (std::size_t mu = 0; mu < chart.n(); ++mu) {
      flux[i][mu] = symcore::partial(lagrangian, chart.z(i, chart.unit(mu)));
    }
    source[i] = symcore::partial(lagrangian, chart.y(i));
  }
  return BalanceSystem(chart, std::move(flux), std::move(source));
}

}  // namespace bicomplex::balance
