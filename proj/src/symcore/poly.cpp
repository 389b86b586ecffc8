#include "bicomplex/symcore/poly.hpp"

#include <algorithm>
#include <string>

#include "bicomplex/errors.hpp"
#include "bicomplex/symcore/kernels.hpp"

namespace bicomplex::symcore {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::of(VarRef var, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.push_back({var, exponent});
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.exponent == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exponent += f.exponent;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.exponent;
  }
  return m;
}

std::uint32_t Monomial::vertical_degree() const {
  std::uint32_t d = 0;
  for (const Factor& f : factors_) {
    if (f.var.is_jet()) d += f.exponent;
  }
  return d;
}

unsigned Monomial::jet_order() const {
  unsigned order = 0;
  for (const Factor& f : factors_) order = std::max(order, f.var.jet_order());
  return order;
}

std::uint32_t Monomial::exponent(const VarRef& var) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), var,
      [](const Factor& f, const VarRef& v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exponent : 0;
}

Monomial Monomial::lowered(const VarRef& var) const {
  Monomial out = *this;
  for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
    if (it->var == var) {
      if (--it->exponent == 0) out.factors_.erase(it);
      --out.degree_;
      return out;
    }
  }
  throw Error(ErrorCode::InternalInvariant, "lowering an absent variable");
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (const Factor& f : other.factors_) {
    if (exponent(f.var) < f.exponent) return false;
  }
  return true;
}

Monomial Monomial::divided(const Monomial& other) const {
  std::vector<Factor> out;
  for (const Factor& f : factors_) {
    const std::uint32_t e = f.exponent - other.exponent(f.var);
    if (e > 0) out.push_back({f.var, e});
  }
  Monomial m;
  m.factors_ = std::move(out);
  for (const Factor& f : m.factors_) m.degree_ += f.exponent;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var == j->var) {
      out.factors_.push_back({i->var, i->exponent + j->exponent});
      ++i;
      ++j;
    } else if (i->var < j->var) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto fa = a.factors();
  const auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].var == fb[j].var) {
      if (fa[i].exponent != fb[j].exponent) {
        return fa[i].exponent > fb[j].exponent;
      }
      ++i;
      ++j;
    } else {
      return fa[i].var < fb[j].var;
    }
  }
  return false;
}

// ---- term lists -------------------------------------------------------------

void canonicalize_terms(std::vector<Term>& terms) {
  const CanonicalOrder before;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return before(a.monomial, b.monomial);
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coeff;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial) {
      sum += terms[j].coeff;
      ++j;
    }
    if (!sum.is_zero()) {
      if (out != i) terms[out].monomial = std::move(terms[i].monomial);
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b) {
  const CanonicalOrder before;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].monomial == b[j].monomial) {
      Rational sum = a[i].coeff + b[j].coeff;
      if (!sum.is_zero()) out.push_back({a[i].monomial, std::move(sum)});
      ++i;
      ++j;
    } else if (before(a[i].monomial, b[j].monomial)) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

Poly canonical_poly(std::vector<Term> sorted_unique) {
  return Poly(std::move(sorted_unique));
}

// ---- Poly -------------------------------------------------------------------

Poly::Poly(const Rational& value) {
  if (!value.is_zero()) terms_.push_back({Monomial(), value});
}

Poly Poly::variable(const VarRef& var, std::uint32_t exponent) {
  return term(Rational(1), Monomial::of(var, exponent));
}

Poly Poly::term(const Rational& coeff, Monomial monomial) {
  Poly p;
  if (!coeff.is_zero()) p.terms_.push_back({std::move(monomial), coeff});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  canonicalize_terms(terms);
  return Poly(std::move(terms));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Poly::constant_value() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return terms_.back().coeff;
  }
  return Rational(0);
}

unsigned Poly::jet_order() const {
  unsigned order = 0;
  for (const Term& t : terms_) order = std::max(order, t.monomial.jet_order());
  return order;
}

bool Poly::has_vertical() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.monomial.vertical_degree() > 0;
  });
}

bool Poly::has_base() const {
  for (const Term& t : terms_) {
    for (const Factor& f : t.monomial.factors()) {
      if (f.var.is_base()) return true;
    }
  }
  return false;
}

std::vector<VarRef> Poly::variables() const {
  std::vector<VarRef> vars;
  for (const Term& t : terms_) {
    for (const Factor& f : t.monomial.factors()) vars.push_back(f.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  terms_ = merge_terms(terms_, other.terms_);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  *this = kernels::multiply(*this, other);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) { return kernels::multiply(a, b); }

Poly Poly::scaled(const Rational& factor) const {
  if (factor.is_zero()) return Poly();
  Poly out = *this;
  for (Term& t : out.terms_) t.coeff *= factor;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

// ---- calculus ---------------------------------------------------------------

Poly partial(const Poly& p, const VarRef& var) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    const std::uint32_t e = t.monomial.exponent(var);
    if (e == 0) continue;
    out.push_back({t.monomial.lowered(var), t.coeff * Rational(static_cast<long>(e))});
  }
  return Poly::from_terms(std::move(out));
}

Poly total_derivative(const Poly& p, std::size_t mu) {
  return kernels::total_derivative(p, mu);
}

Poly total_derivative(const Poly& p, const MultiIndex& lambda) {
  Poly out = p;
  for (std::size_t mu = 0; mu < lambda.n(); ++mu) {
    for (unsigned k = 0; k < lambda[mu]; ++k) out = total_derivative(out, mu);
  }
  return out;
}

std::map<std::uint32_t, Poly> vertical_components(const Poly& p) {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const Term& t : p.terms()) {
    buckets[t.monomial.vertical_degree()].push_back(t);
  }
  std::map<std::uint32_t, Poly> out;
  for (auto& [degree, terms] : buckets) {
    out.emplace(degree, canonical_poly(std::move(terms)));
  }
  return out;
}

Poly base_part(const Poly& p) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    if (t.monomial.vertical_degree() == 0) out.push_back(t);
  }
  return canonical_poly(std::move(out));
}

Poly vertical_part(const Poly& p) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    if (t.monomial.vertical_degree() > 0) out.push_back(t);
  }
  return canonical_poly(std::move(out));
}

Poly scale_integrate(const Poly& p, int e) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    const long weight = static_cast<long>(t.monomial.vertical_degree()) + e + 1;
    if (weight <= 0) {
      throw Error(ErrorCode::NonIntegrable,
                  "t-integral with exponent " + std::to_string(e) +
                      " diverges on a term of vertical degree " +
                      std::to_string(t.monomial.vertical_degree()));
    }
    out.push_back({t.monomial, t.coeff / Rational(weight)});
  }
  return canonical_poly(std::move(out));
}

Poly evaluate(const Poly& p, const std::function<std::optional<Rational>(const VarRef&)>& value_of) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    std::vector<Factor> kept;
    for (const Factor& f : t.monomial.factors()) {
      if (auto v = value_of(f.var)) {
        for (std::uint32_t k = 0; k < f.exponent; ++k) c *= *v;
      } else {
        kept.push_back(f);
      }
    }
    out.push_back({Monomial::from_factors(std::move(kept)), std::move(c)});
  }
  return Poly::from_terms(std::move(out));
}

Rational evaluate_exact(const Poly& p, const std::function<std::optional<Rational>(const VarRef&)>& value_of) {
  const Poly v = evaluate(p, value_of);
  if (!v.is_constant()) {
    throw Error(ErrorCode::InvalidArgument, "evaluation point misses a variable");
  }
  return v.constant_value();
}

Poly substitute(const Poly& p, const std::function<std::optional<Poly>(const VarRef&)>& replacement) {
  Poly out;
  for (const Term& t : p.terms()) {
    Poly product(t.coeff);
    std::vector<Factor> kept;
    for (const Factor& f : t.monomial.factors()) {
      if (auto r = replacement(f.var)) {
        product *= r->pow(f.exponent);
      } else {
        kept.push_back(f);
      }
    }
    out += product * Poly::term(Rational(1), Monomial::from_factors(std::move(kept)));
  }
  return out;
}

std::optional<Poly> try_divide(const Poly& p, const Poly& divisor) {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  }
  const Term& lead = divisor.leading();
  Poly quotient;
  Poly rest = p;
  while (!rest.is_zero()) {
    const Term& top = rest.leading();
    if (!top.monomial.divisible_by(lead.monomial)) return std::nullopt;
    const Poly step =
        Poly::term(top.coeff / lead.coeff, top.monomial.divided(lead.monomial));
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

}  // namespace bicomplex::symcore
