#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bicomplex/symcore/rational.hpp"
#include "bicomplex/symcore/variables.hpp"

namespace bicomplex::symcore {

struct Factor {
  VarRef var;
  std::uint32_t exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Power product of coordinates; factors sorted by VarRef, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarRef var, std::uint32_t exponent = 1);
  /// Builds from arbitrary factors; merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t vertical_degree() const;
  unsigned jet_order() const;
  std::uint32_t exponent(const VarRef& var) const;

  /// Same monomial with `var`'s exponent lowered by one (must be present).
  Monomial lowered(const VarRef& var) const;
  /// True when every exponent of `other` is bounded by ours.
  bool divisible_by(const Monomial& other) const;
  Monomial divided(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Canonical monomial order: higher total degree first, then lexicographic
/// over the VarRef order (earlier variable with larger exponent first).
/// This is a monomial order, so leading terms behave under multiplication.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients over base
/// and jet coordinates. Terms are kept in CanonicalOrder with no zero
/// coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  Poly() = default;
  Poly(long value) : Poly(Rational(value)) {}  // NOLINT
  Poly(const Rational& value);                 // NOLINT
  static Poly variable(const VarRef& var, std::uint32_t exponent = 1);
  static Poly term(const Rational& coeff, Monomial monomial);
  /// Sorts and combines arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }

  /// Max |Lambda| over jet variables present (0 for none).
  unsigned jet_order() const;
  /// True when some term involves a jet (field or derivative) variable.
  bool has_vertical() const;
  /// True when some term involves a base variable.
  bool has_base() const;
  /// Every variable occurring, in VarRef order.
  std::vector<VarRef> variables() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly scaled(const Rational& factor) const;
  Poly pow(unsigned exponent) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  explicit Poly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  friend Poly canonical_poly(std::vector<Term> sorted_unique);

  std::vector<Term> terms_;
};

/// Wraps terms that are already sorted, combined and nonzero.
Poly canonical_poly(std::vector<Term> sorted_unique);

/// Sorts and merges like terms in place; drops zeros.
void canonicalize_terms(std::vector<Term>& terms);
/// Merges two canonical term lists.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b);

/// Formal partial derivative with respect to a single coordinate.
Poly partial(const Poly& p, const VarRef& var);

/// d_mu p = dp/dx^mu + sum z^i_{Lambda+1_mu} dp/dz^i_Lambda.
Poly total_derivative(const Poly& p, std::size_t mu);

/// Iterated total derivative d_Lambda (total derivatives commute).
Poly total_derivative(const Poly& p, const MultiIndex& lambda);

/// Homogeneous pieces by vertical degree (base variables weigh 0).
std::map<std::uint32_t, Poly> vertical_components(const Poly& p);

/// Terms of vertical degree 0, i.e. p(x, 0, 0).
Poly base_part(const Poly& p);
/// p - p(x, 0, 0).
Poly vertical_part(const Poly& p);

/// Exact value of int_0^1 t^e p(x, t y, t z) dt. Each monomial of vertical
/// degree d is divided by d + e + 1; throws NonIntegrable when that is <= 0.
Poly scale_integrate(const Poly& p, int e);

/// Substitutes exact values for variables; variables without a value stay.
Poly evaluate(const Poly& p, const std::function<std::optional<Rational>(const VarRef&)>& value_of);

/// Full evaluation; throws InvalidArgument if a variable has no value.
Rational evaluate_exact(const Poly& p, const std::function<std::optional<Rational>(const VarRef&)>& value_of);

/// Replaces variables by polynomials; variables mapped to nullopt stay.
Poly substitute(const Poly& p, const std::function<std::optional<Poly>(const VarRef&)>& replacement);

/// Exact quotient p / divisor when it exists (multivariate division by
/// leading terms in CanonicalOrder); nullopt when the remainder is nonzero.
std::optional<Poly> try_divide(const Poly& p, const Poly& divisor);

}  // namespace bicomplex::symcore
