#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bicomplex/balance/system.hpp"
#include "bicomplex/variational/operators.hpp"

namespace bicomplex::cli {

using symcore::Chart;
using symcore::MultiIndex;
using symcore::Poly;

/// Parsed system file. Relations with a zero right-hand side are dropped
/// after the duplicate check, so equal documents compare equal.
struct SystemDocument {
  std::string title;
  std::vector<std::string> notes;
  Chart chart;
  /// (field, Lambda) -> F^Lambda_i with |Lambda| >= 1.
  std::map<std::pair<std::size_t, MultiIndex>, Poly> flux;
  /// field -> Pi_i.
  std::map<std::size_t, Poly> source;

  /// True when some flux slot has |Lambda| >= 2.
  bool is_higher_order() const;
  /// Throws UnsupportedInput for higher-order documents.
  balance::BalanceSystem balance_system() const;
  /// Every flux slot plus the sources as the Lambda = 0 entries.
  variational::HigherBalanceData higher_data() const;

  friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

/// Throws DiagnosticError (ParseError, UndeclaredName, DuplicateRelation,
/// InvalidChart) with the position of the offending token.
SystemDocument parse_system(std::string_view text);

/// Canonical text form; parse_system(to_text(doc)) == doc.
std::string to_text(const SystemDocument& doc);

/// Relation slot label: "t", "xx", or "(2,0)" when the coordinate word is
/// ambiguous.
std::string slot_label(const Chart& chart, const MultiIndex& lambda);

/// Section file: one "field = expr" line per field, expressions in base
/// variables only. Returns the components in field order.
std::vector<Poly> parse_section(std::string_view text, const Chart& chart);

/// Parses "expr" over the chart's variables.
Poly parse_expression(std::string_view text, const Chart& chart);

/// "1, -1/2, 3" -> rationals; throws DiagnosticError on malformed input.
std::vector<symcore::Rational> parse_point(std::string_view text);

}  // namespace bicomplex::cli
