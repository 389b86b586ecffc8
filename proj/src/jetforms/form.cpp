#include "bicomplex/jetforms/form.hpp"

#include <algorithm>

#include "bicomplex/errors.hpp"

namespace bicomplex::jetforms {

namespace {

template <typename T>
int insertion_sort(std::vector<T>& v) {
  int sign = 1;
  for (std::size_t k = 1; k < v.size(); ++k) {
    for (std::size_t j = k; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] == v[k - 1]) return 0;
  }
  return sign;
}

int parity(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

ContactGen ContactGen::of(const VarRef& jet_var) {
  if (!jet_var.is_jet()) {
    throw Error(ErrorCode::InvalidArgument, "contact generator needs a jet variable");
  }
  return {jet_var.index(), jet_var.lambda()};
}

std::strong_ordering operator<=>(const ContactGen& a, const ContactGen& b) {
  if (auto c = a.field <=> b.field; c != 0) return c;
  return a.lambda <=> b.lambda;
}

std::strong_ordering operator<=>(const Basis& a, const Basis& b) {
  if (auto c = a.s() <=> b.s(); c != 0) return c;
  if (auto c = a.r() <=> b.r(); c != 0) return c;
  if (auto c = a.dx <=> b.dx; c != 0) return c;
  return a.omega <=> b.omega;
}

int sort_dx(std::vector<std::size_t>& dx) { return insertion_sort(dx); }
int sort_omega(std::vector<ContactGen>& omega) { return insertion_sort(omega); }

Form::Form(Poly function) {
  if (!function.is_zero()) terms_.emplace(Basis{}, std::move(function));
}

Form Form::term(Poly coeff, std::vector<std::size_t> dx, std::vector<ContactGen> omega) {
  const int sign = sort_dx(dx) * sort_omega(omega);
  Form out;
  if (sign == 0 || coeff.is_zero()) return out;
  if (sign < 0) coeff = -coeff;
  out.terms_.emplace(Basis{std::move(dx), std::move(omega)}, std::move(coeff));
  return out;
}

Form Form::dx(std::size_t mu) { return term(Poly(1), {mu}, {}); }

Form Form::omega(std::size_t field, const MultiIndex& lambda) {
  return term(Poly(1), {}, {ContactGen{field, lambda}});
}

Form Form::omega(const VarRef& jet_var) {
  return term(Poly(1), {}, {ContactGen::of(jet_var)});
}

Form Form::volume(const Chart& chart) {
  std::vector<std::size_t> dx(chart.n());
  for (std::size_t mu = 0; mu < dx.size(); ++mu) dx[mu] = mu;
  return term(chart.rho(), std::move(dx), {});
}

Poly Form::coefficient(const Basis& basis) const {
  const auto it = terms_.find(basis);
  return it == terms_.end() ? Poly() : it->second;
}

std::set<Bidegree> Form::bidegrees() const {
  std::set<Bidegree> out;
  for (const auto& [basis, coeff] : terms_) out.insert({basis.s(), basis.r()});
  return out;
}

bool Form::is_homogeneous(std::size_t s, std::size_t r) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.first.s() == s && t.first.r() == r;
  });
}

std::optional<Bidegree> Form::bidegree() const {
  const auto all = bidegrees();
  if (all.size() != 1) return std::nullopt;
  return *all.begin();
}

Form Form::component(std::size_t s, std::size_t r) const {
  Form out;
  for (const auto& [basis, coeff] : terms_) {
    if (basis.s() == s && basis.r() == r) out.terms_.emplace(basis, coeff);
  }
  return out;
}

unsigned Form::jet_order() const {
  unsigned order = 0;
  for (const auto& [basis, coeff] : terms_) {
    order = std::max(order, coeff.jet_order());
    for (const ContactGen& g : basis.omega) order = std::max(order, g.lambda.order());
  }
  return order;
}

void Form::add(const Basis& basis, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(basis, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [basis, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Form& Form::operator+=(const Form& other) {
  for (const auto& [basis, coeff] : other.terms_) add(basis, coeff);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  for (const auto& [basis, coeff] : other.terms_) add(basis, -coeff);
  return *this;
}

Form Form::times(const Poly& f) const {
  Form out;
  for (const auto& [basis, coeff] : terms_) out.add(basis, coeff * f);
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      // dx_a ^ w_a ^ dx_b ^ w_b = (-1)^{r_a s_b} dx_a ^ dx_b ^ w_a ^ w_b
      std::vector<std::size_t> dx = ba.dx;
      dx.insert(dx.end(), bb.dx.begin(), bb.dx.end());
      std::vector<ContactGen> omega = ba.omega;
      omega.insert(omega.end(), bb.omega.begin(), bb.omega.end());
      Poly coeff = ca * cb;
      if (ba.r() * bb.s() % 2 == 1) coeff = -coeff;
      out += Form::term(std::move(coeff), std::move(dx), std::move(omega));
    }
  }
  return out;
}

Form d_V(const Form& w) {
  Form out;
  for (const auto& [basis, coeff] : w.terms()) {
    for (const VarRef& var : coeff.variables()) {
      if (!var.is_jet()) continue;
      // d_V f ^ dx^h ^ w^c = (-1)^s dx^h ^ w_var ^ w^c
      std::vector<ContactGen> omega{ContactGen::of(var)};
      omega.insert(omega.end(), basis.omega.begin(), basis.omega.end());
      Poly c = symcore::partial(coeff, var);
      if (basis.s() % 2 == 1) c = -c;
      out += Form::term(std::move(c), basis.dx, std::move(omega));
    }
  }
  return out;
}

Form total_derivative_form(const Form& w, std::size_t mu) {
  Form out;
  for (const auto& [basis, coeff] : w.terms()) {
    out += Form::term(symcore::total_derivative(coeff, mu), basis.dx, basis.omega);
    for (std::size_t a = 0; a < basis.omega.size(); ++a) {
      std::vector<ContactGen> omega = basis.omega;
      omega[a].lambda = omega[a].lambda.raised(mu);
      out += Form::term(coeff, basis.dx, std::move(omega));
    }
  }
  return out;
}

Form total_derivative_form(const Form& w, const MultiIndex& lambda) {
  Form out = w;
  for (std::size_t mu = 0; mu < lambda.n(); ++mu) {
    for (unsigned k = 0; k < lambda[mu]; ++k) out = total_derivative_form(out, mu);
  }
  return out;
}

Form d_H(const Form& w, std::size_t n) {
  Form out;
  for (std::size_t mu = 0; mu < n; ++mu) {
    out += wedge(Form::dx(mu), total_derivative_form(w, mu));
  }
  return out;
}

Form d(const Form& w, std::size_t n) { return d_H(w, n) + d_V(w); }

Form contract(const Form& w, const VarRef& jet_var) {
  const ContactGen g = ContactGen::of(jet_var);
  Form out;
  for (const auto& [basis, coeff] : w.terms()) {
    const auto it = std::find(basis.omega.begin(), basis.omega.end(), g);
    if (it == basis.omega.end()) continue;
    const auto a = static_cast<std::size_t>(it - basis.omega.begin());
    std::vector<ContactGen> omega = basis.omega;
    omega.erase(omega.begin() + static_cast<std::ptrdiff_t>(a));
    out += Form::term(parity(basis.s() + a) > 0 ? coeff : -coeff, basis.dx,
                      std::move(omega));
  }
  return out;
}

}  // namespace bicomplex::jetforms
