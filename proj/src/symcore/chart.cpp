#include "bicomplex/symcore/chart.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "bicomplex/errors.hpp"

namespace bicomplex::symcore {

namespace {

// F and Pi open a relation only when followed by '[', so they stay usable as
// names.
constexpr std::array<std::string_view, 6> kKeywords = {
    "base", "fields", "density", "d", "title", "note"};

constexpr std::array<std::string_view, 24> kGreek = {
    "alpha", "beta",  "gamma", "delta", "epsilon", "zeta",  "eta",   "theta",
    "iota",  "kappa", "lambda", "mu",   "nu",      "xi",    "pi",    "rho",
    "sigma", "tau",   "upsilon", "phi", "chi",     "psi",   "omega", "varphi"};

void validate_names(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) {
    throw Error(ErrorCode::InvalidChart, std::string("chart needs at least one ") + what);
  }
  for (const auto& name : names) {
    if (!is_valid_name(name)) {
      throw Error(ErrorCode::InvalidChart, std::string("invalid ") + what + " name '" + name + "'");
    }
  }
}

void collect(std::string_view rest, const std::vector<std::string>& names,
             MultiIndex acc, std::set<MultiIndex>& out) {
  if (rest.empty()) {
    out.insert(acc);
    return;
  }
  for (std::size_t mu = 0; mu < names.size(); ++mu) {
    if (rest.starts_with(names[mu])) {
      collect(rest.substr(names[mu].size()), names, acc.raised(mu), out);
    }
  }
}

}  // namespace

bool is_valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return std::find(kKeywords.begin(), kKeywords.end(), name) == kKeywords.end();
}

Chart::Chart(std::vector<std::string> base_names,
             std::vector<std::string> field_names, Poly rho)
    : base_(std::move(base_names)), fields_(std::move(field_names)), rho_(std::move(rho)) {
  validate_names(base_, "base coordinate");
  validate_names(fields_, "field");
  if (base_.size() > kMaxBase) {
    throw Error(ErrorCode::InvalidChart,
                "at most " + std::to_string(kMaxBase) + " base coordinates are supported");
  }
  std::set<std::string> seen;
  for (const auto& name : base_) seen.insert(name);
  for (const auto& name : fields_) seen.insert(name);
  if (seen.size() != base_.size() + fields_.size()) {
    throw Error(ErrorCode::InvalidChart, "chart names must be distinct");
  }
  if (rho_.is_zero()) throw Error(ErrorCode::InvalidChart, "density must be nonzero");
  for (const VarRef& v : rho_.variables()) {
    if (!v.is_base() || v.index() >= base_.size()) {
      throw Error(ErrorCode::InvalidChart, "density may depend on base coordinates only");
    }
  }
}

std::optional<std::size_t> Chart::base_index(std::string_view name) const {
  for (std::size_t mu = 0; mu < base_.size(); ++mu) {
    if (base_[mu] == name) return mu;
  }
  return std::nullopt;
}

std::optional<std::size_t> Chart::field_index(std::string_view name) const {
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    if (fields_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<MultiIndex> Chart::decompose_suffix(std::string_view suffix) const {
  std::set<MultiIndex> found;
  if (!suffix.empty()) collect(suffix, base_, MultiIndex(n()), found);
  return {found.begin(), found.end()};
}

VarRef Chart::z(std::size_t i, std::string_view suffix) const {
  const auto options = decompose_suffix(suffix);
  if (options.size() != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "derivative suffix '" + std::string(suffix) + "' is not a unique coordinate word");
  }
  return VarRef::jet(i, options.front());
}

std::string Chart::suffix(const MultiIndex& lambda) const {
  std::string out;
  for (std::size_t mu = 0; mu < lambda.n(); ++mu) {
    for (unsigned k = 0; k < lambda[mu]; ++k) out += base_[mu];
  }
  return out;
}

std::string Chart::var_name(const VarRef& var) const {
  if (var.is_base()) return base_.at(var.index());
  const std::string& field = fields_.at(var.index());
  const MultiIndex& lambda = var.lambda();
  if (lambda.order() == 0) return field;
  const std::string s = suffix(lambda);
  const auto options = decompose_suffix(s);
  if (options.size() == 1) return field + "_" + s;
  std::string out = "d(" + field + ";";
  for (std::size_t mu = 0; mu < lambda.n(); ++mu) {
    if (mu > 0) out += ",";
    out += std::to_string(lambda[mu]);
  }
  return out + ")";
}

std::string Chart::name_latex(std::string_view name) const {
  if (std::find(kGreek.begin(), kGreek.end(), name) != kGreek.end()) {
    return "\\" + std::string(name) + " ";
  }
  if (name.size() == 1) return std::string(name);
  return "\\mathrm{" + std::string(name) + "}";
}

std::string Chart::suffix_latex(const MultiIndex& lambda) const {
  std::string sub;
  for (std::size_t mu = 0; mu < lambda.n(); ++mu) {
    for (unsigned k = 0; k < lambda[mu]; ++k) sub += name_latex(base_[mu]);
  }
  while (!sub.empty() && sub.back() == ' ') sub.pop_back();
  return sub;
}

std::string Chart::var_latex(const VarRef& var) const {
  if (var.is_base()) return name_latex(base_.at(var.index()));
  std::string out = name_latex(fields_.at(var.index()));
  const MultiIndex& lambda = var.lambda();
  if (lambda.order() == 0) return out;
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out + "_{" + suffix_latex(lambda) + "}";
}

namespace {

template <typename FactorFn, typename CoeffFn>
std::string render(const Poly& p, FactorFn factor, CoeffFn coeff) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? -t.coeff : t.coeff;
    std::vector<std::string> parts;
    if (t.monomial.is_one() || !magnitude.is_one()) parts.push_back(coeff(magnitude));
    for (const Factor& f : t.monomial.factors()) parts.push_back(factor(f));
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k > 0) out += " ";
      out += parts[k];
    }
  }
  return out;
}

}  // namespace

std::string to_text(const Poly& p, const Chart& chart) {
  return render(
      p,
      [&](const Factor& f) {
        std::string s = chart.var_name(f.var);
        if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
        return s;
      },
      [](const Rational& c) { return c.str(); });
}

std::string to_latex(const Poly& p, const Chart& chart) {
  return render(
      p,
      [&](const Factor& f) {
        std::string s = chart.var_latex(f.var);
        while (!s.empty() && s.back() == ' ') s.pop_back();
        if (f.exponent > 1) s += "^{" + std::to_string(f.exponent) + "}";
        return s;
      },
      [](const Rational& c) {
        if (c.is_integer()) return c.numerator();
        return "\\frac{" + c.numerator() + "}{" + c.denominator() + "}";
      });
}

}  // namespace bicomplex::symcore
