#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicomplex/symcore/poly.hpp"

namespace bicomplex::symcore {

/// Fibred chart: named base coordinates x^mu, named fields y^i, and the
/// volume density rho(x) standing in for sqrt|G| (default 1).
class Chart {
 public:
  /// Throws InvalidChart on empty/duplicate/malformed names, n > kMaxBase,
  /// zero rho, or rho depending on anything but base coordinates.
  Chart(std::vector<std::string> base_names,
        std::vector<std::string> field_names, Poly rho = Poly(1));

  std::size_t n() const { return base_.size(); }
  std::size_t m() const { return fields_.size(); }
  const std::vector<std::string>& base_names() const { return base_; }
  const std::vector<std::string>& field_names() const { return fields_; }
  const std::string& base_name(std::size_t mu) const { return base_[mu]; }
  const std::string& field_name(std::size_t i) const { return fields_[i]; }
  const Poly& rho() const { return rho_; }
  bool unit_density() const { return rho_ == Poly(1); }

  std::optional<std::size_t> base_index(std::string_view name) const;
  std::optional<std::size_t> field_index(std::string_view name) const;

  VarRef x(std::size_t mu) const { return VarRef::base(mu); }
  VarRef y(std::size_t i) const { return VarRef::field(i, n()); }
  VarRef z(std::size_t i, const MultiIndex& lambda) const {
    return VarRef::jet(i, lambda);
  }
  /// z(i, Lambda) with Lambda spelled as concatenated coordinate names
  /// ("tx"); throws InvalidArgument when the suffix does not decompose
  /// uniquely.
  VarRef z(std::size_t i, std::string_view suffix) const;
  MultiIndex unit(std::size_t mu) const { return MultiIndex::unit(n(), mu); }

  /// Every distinct multi-index the suffix spells as a concatenation of
  /// coordinate names.
  std::vector<MultiIndex> decompose_suffix(std::string_view suffix) const;

  /// Concatenated coordinate names for Lambda ("tx"), in coordinate order.
  std::string suffix(const MultiIndex& lambda) const;

  /// "x", "u", "u_tx"; falls back to the numeric "d(u;1,1)" form when the
  /// suffix spelling would not parse back uniquely.
  std::string var_name(const VarRef& var) const;
  std::string var_latex(const VarRef& var) const;
  /// LaTeX subscript body for Lambda ("tx", "\\xi\\eta").
  std::string suffix_latex(const MultiIndex& lambda) const;
  std::string name_latex(std::string_view name) const;

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::vector<std::string> base_;
  std::vector<std::string> fields_;
  Poly rho_;
};

/// True for [A-Za-z][A-Za-z0-9]* that is not a DSL keyword.
bool is_valid_name(std::string_view name);

/// Canonical text: terms in canonical order, rationals as p/q, factors
/// juxtaposed ("1/2 u u_t - 1/6 u^2 u_x"). Parses back with the CLI grammar.
std::string to_text(const Poly& p, const Chart& chart);
std::string to_latex(const Poly& p, const Chart& chart);

}  // namespace bicomplex::symcore
