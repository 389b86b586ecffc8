#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bicomplex/symcore/chart.hpp"
#include "bicomplex/symcore/poly.hpp"

namespace bicomplex::jetforms {

using symcore::Chart;
using symcore::MultiIndex;
using symcore::Poly;
using symcore::VarRef;

/// Contact one-form omega^i_Lambda.
struct ContactGen {
  std::size_t field = 0;
  MultiIndex lambda;

  VarRef var() const { return VarRef::jet(field, lambda); }
  static ContactGen of(const VarRef& jet_var);

  friend bool operator==(const ContactGen&, const ContactGen&) = default;
  /// By field, then Lambda.
  friend std::strong_ordering operator<=>(const ContactGen& a, const ContactGen& b);
};

/// Basis element dx^{h_1} ^ ... ^ dx^{h_s} ^ omega_{c_1} ^ ... ^ omega_{c_r},
/// both lists strictly increasing.
struct Basis {
  std::vector<std::size_t> dx;
  std::vector<ContactGen> omega;

  std::size_t s() const { return dx.size(); }
  std::size_t r() const { return omega.size(); }

  friend bool operator==(const Basis&, const Basis&) = default;
  /// By (s, r), then dx lexicographically, then omega lexicographically.
  friend std::strong_ordering operator<=>(const Basis& a, const Basis& b);
};

using Bidegree = std::pair<std::size_t, std::size_t>;

/// Exterior form on the jet bundle: a finite sum of Poly coefficients times
/// canonical basis elements. Antisymmetry signs live in the coefficients.
/// The volume form eta is rho dx^0 ^ ... ^ dx^{n-1}, so rho sits inside the
/// coefficient of top-degree horizontal terms.
class Form {
 public:
  Form() = default;
  Form(Poly function);  // NOLINT: 0-forms are functions

  /// coeff * dx^{dx...} ^ omega_{omega...} with factors in any order.
  static Form term(Poly coeff, std::vector<std::size_t> dx,
                   std::vector<ContactGen> omega);
  static Form dx(std::size_t mu);
  static Form omega(std::size_t field, const MultiIndex& lambda);
  static Form omega(const VarRef& jet_var);
  /// eta = rho dx^0 ^ ... ^ dx^{n-1}.
  static Form volume(const Chart& chart);

  const std::map<Basis, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Poly coefficient(const Basis& basis) const;

  std::set<Bidegree> bidegrees() const;
  /// True when every term has bidegree (s, r); the zero form qualifies.
  bool is_homogeneous(std::size_t s, std::size_t r) const;
  /// The single bidegree of a nonzero homogeneous form.
  std::optional<Bidegree> bidegree() const;
  /// Terms of bidegree (s, r).
  Form component(std::size_t s, std::size_t r) const;

  /// Max jet order over coefficients and contact generators.
  unsigned jet_order() const;

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  /// Multiplies every coefficient by a function.
  Form times(const Poly& f) const;

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend bool operator==(const Form&, const Form&) = default;

 private:
  void add(const Basis& basis, const Poly& coeff);

  std::map<Basis, Poly> terms_;
};

/// Sorts factors in place; returns +1/-1 for the permutation parity, or 0
/// when a factor repeats.
int sort_dx(std::vector<std::size_t>& dx);
int sort_omega(std::vector<ContactGen>& omega);

Form wedge(const Form& a, const Form& b);

/// Vertical differential: d_V f = sum df/dz^i_Lambda omega^i_Lambda;
/// d_V dx = d_V omega = 0.
Form d_V(const Form& w);

/// Total derivative along x^mu acting as a derivation: coefficients by d_mu,
/// dx^nu -> 0, omega^j_S -> omega^j_{S+1_mu}.
Form total_derivative_form(const Form& w, std::size_t mu);
/// Iterated over a multi-index.
Form total_derivative_form(const Form& w, const MultiIndex& lambda);

/// Horizontal differential sum_mu dx^mu ^ d_mu(w).
Form d_H(const Form& w, std::size_t n);

/// Full exterior derivative d_H + d_V.
Form d(const Form& w, std::size_t n);

/// Interior product with the coordinate field d/dz^i_Lambda.
Form contract(const Form& w, const VarRef& jet_var);

}  // namespace bicomplex::jetforms
