#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bicomplex/jetforms/form.hpp"

namespace bicomplex::variational {

using jetforms::Form;
using symcore::Chart;
using symcore::MultiIndex;
using symcore::Poly;
using symcore::VarRef;

/// A source form: an (n, s) form fixed by the interior Euler operator.
class FunctionalForm {
 public:
  FunctionalForm() = default;
  FunctionalForm(Form form, std::size_t n, std::size_t s);

  /// sum_i E_i w^i ^ dx^0 ^ ... ^ dx^{n-1}.
  static FunctionalForm from_components(const std::vector<Poly>& components, std::size_t n);

  const Form& form() const { return form_; }
  std::size_t n() const { return n_; }
  std::size_t degree() const { return s_; }
  bool is_zero() const { return form_.is_zero(); }

  /// E_i against w^i ^ dx-volume; only for degree 1.
  std::vector<Poly> components(std::size_t m) const;

  friend bool operator==(const FunctionalForm&, const FunctionalForm&) = default;

 private:
  Form form_;
  std::size_t n_ = 0;
  std::size_t s_ = 1;
};

/// I(w) = (1/s) sum_i w^i ^ sum_L (-d)_L (i_{d/dz^i_L} w), summed over the
/// generators present in w. Throws BidegreeError unless w is homogeneous of
/// bidegree (n, s) with s >= 1.
FunctionalForm interior_euler(const Form& w, const Chart& chart);

/// Vertical homotopy of a homogeneous (r, s) form, s >= 1: each coefficient
/// monomial of vertical degree d gets weight 1/(d+s) and each contact factor
/// w^i_L is traded for the unscaled z^i_L with the interior-product sign.
Form vertical_homotopy(const Form& w);

struct VerticalSplit {
  Form exact_part;  ///< d_V h(w)
  Form complement;  ///< h(d_V w)
};

/// w = d_V h(w) + h(d_V w).
VerticalSplit vertical_decompose(const Form& w);

/// E(L) = I(d_V(L eta)); components are sum_L (-1)^|L| d_L(rho dL/dz^i_L).
FunctionalForm euler_lagrange(const Poly& lagrangian, const Chart& chart);

/// True when I(w) = w for a homogeneous (n, s) form.
bool is_functional(const Form& w, const Chart& chart);

/// I(d_V F); throws NotFunctional when F is not fixed by I.
FunctionalForm delta_V(const FunctionalForm& f, const Chart& chart);

/// Coefficients F^S_i of sum F^S_i w^i_S ^ eta; the S = 0 entry acts as the
/// source.
struct HigherBalanceData {
  Chart chart;
  std::map<std::pair<std::size_t, MultiIndex>, Poly> coefficients;
};

/// residual_i = sum_{|S|>0} (-1)^{|S|-1} d_S(F^S_i rho) - F^0_i rho.
std::vector<Poly> higher_balance_residual(const HigherBalanceData& data);

/// sum_{i,S} F^S_i w^i_S ^ eta. Its interior Euler components are the
/// negated residuals.
Form higher_balance_form(const HigherBalanceData& data);

/// p = base + sum_mu d_mu flux[mu] + remainder, with
/// remainder = int_0^1 t^{-1} sum_i y^i E_i(p)(x, ty, tz) dt and E the plain
/// (unit density) Euler operator. The remainder vanishes iff p is a total
/// divergence up to its base part.
struct DivergenceSplit {
  Poly base;  ///< p(x, 0, 0)
  std::vector<Poly> flux;
  Poly remainder;
};

DivergenceSplit divergence_split(const Poly& p, std::size_t n);

}  // namespace bicomplex::variational
