#pragma once

#include <optional>
#include <vector>

#include "bicomplex/balance/system.hpp"
#include "bicomplex/errors.hpp"
#include "bicomplex/variational/operators.hpp"

namespace bicomplex::balance {

using variational::FunctionalForm;

/// K = (F^mu_i w^i_mu + Pi_i w^i) ^ eta.
Form build_K(const BalanceSystem& bs);

/// R_i = d_mu(F^mu_i rho) - Pi_i rho.
std::vector<Poly> balance_residuals(const BalanceSystem& bs);

/// I(K); its components are -R_i.
FunctionalForm source_form(const BalanceSystem& bs);

struct HelmholtzResult {
  bool closed = false;
  Form residual;                    ///< dK
  std::optional<Poly> lagrangian;   ///< quasi-Lagrangian when closed
};

HelmholtzResult helmholtz(const BalanceSystem& bs);

/// int_0^1 [y^i Pi_i + z^i_mu F^mu_i](x, ty, tz) dt with the leading y^i and
/// z^i_mu left unscaled.
Poly quasi_lagrangian(const BalanceSystem& bs);

struct KSplit {
  Form lag;   ///< d_V(L eta)
  Form nlag;  ///< K - lag
};

KSplit k_decompose(const BalanceSystem& bs);

struct FSplit {
  FunctionalForm godunov_part;  ///< I(K_nlag)
  FunctionalForm euler_part;    ///< E(L)
};

FSplit f_split(const BalanceSystem& bs);

struct TrivialCheck {
  bool is_trivial = false;
  Poly phi;  ///< x-only part of the pairing; always 0 for polynomials
};

TrivialCheck trivial_quasi_lagrangian_check(const BalanceSystem& bs);

struct DecompositionReport {
  Poly quasi_lagrangian;
  Form k_lag;
  Form k_nlag;
  FunctionalForm el_of_ltilde;
  FunctionalForm godunov_part;
  bool helmholtz_closed = false;
  bool trivial_quasi_lagrangian = false;
};

DecompositionReport decompose(const BalanceSystem& bs);

struct GodunovReport {
  bool is_zero_order = false;
  std::vector<bool> flux_symmetric;            ///< per mu
  std::vector<std::optional<Poly>> potentials; ///< per mu, when symmetric
  Poly source_pairing;                         ///< y^k Pi_k
  std::optional<Rational> pairing_constant;
  bool verdict = false;
  std::optional<ErrorCode> error;              ///< OrderTooHigh for order >= 1
};

GodunovReport godunov_check(const BalanceSystem& bs);

enum class HyperbolicityStatus { Ok, SingularPoint };

struct HyperbolicityReport {
  /// matrices[mu][i][j] = dFt^mu_i/dy^j with Ft = F - dL/dz.
  std::vector<std::vector<std::vector<Poly>>> matrices;
  std::vector<bool> symmetric;
  std::vector<Rational> point;           ///< x values, then y values
  std::vector<Rational> leading_minors;  ///< of M^0 at point
  HyperbolicityStatus status = HyperbolicityStatus::Ok;
  bool verdict = false;
};

/// Throws OrderTooHigh for order >= 1 and InvalidArgument for a point of the
/// wrong length. A zero leading minor gives status SingularPoint.
HyperbolicityReport symmetric_hyperbolicity(const BalanceSystem& bs,
                                            const std::vector<Rational>& point);

/// Replaces z^i_L by d^L section[i]; section polynomials use base variables
/// only.
Poly evaluate_on_section(const Poly& p, const std::vector<Poly>& section);

/// Leading principal minors of a square rational matrix.
std::vector<Rational> leading_minors(const std::vector<std::vector<Rational>>& a);

}  // namespace bicomplex::balance
