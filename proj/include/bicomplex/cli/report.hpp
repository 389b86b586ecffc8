#pragma once

#include <string>
#include <vector>

#include "bicomplex/cli/diagnostic.hpp"
#include "json.hpp"

namespace bicomplex::cli {

using Json = nlohmann::ordered_json;

/// One reported quantity in three renderings.
struct Entry {
  std::string key;
  std::string latex_key;
  std::string text;
  std::string latex;
  Json json;
};

struct Section {
  std::string name;
  std::vector<Entry> entries;

  void add(Entry e) { entries.push_back(std::move(e)); }
  /// Boolean verdict rendered as "true"/"false".
  void flag(const std::string& key, bool value);
  /// Plain word (status names, error codes).
  void word(const std::string& key, const std::string& value);
};

enum class Format { Text, Latex, Structured };

struct Report {
  Json system = Json::object();
  std::vector<Section> sections;
  std::vector<std::string> footnotes;
  std::vector<Diagnostic> diagnostics;

  /// Appends unless the same note is already present.
  void footnote(const std::string& note);
};

/// Deterministic rendering; structured output is JSON with keys "system",
/// "analyses", "footnotes" and, when present, "diagnostics".
std::string render(const Report& report, Format format);

Format parse_format(const std::string& name);

}  // namespace bicomplex::cli
