#include "bicomplex/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace bicomplex::cli {

void Section::flag(const std::string& key, bool value) {
  const std::string s = value ? "true" : "false";
  add({key, "\\text{" + key + "}", s, "\\text{" + s + "}", value});
}

void Section::word(const std::string& key, const std::string& value) {
  add({key, "\\text{" + key + "}", value, "\\text{" + value + "}", value});
}

void Report::footnote(const std::string& note) {
  if (std::find(footnotes.begin(), footnotes.end(), note) == footnotes.end()) {
    footnotes.push_back(note);
  }
}

namespace {

Json diagnostic_json(const Diagnostic& d) {
  Json out = Json::object();
  out["code"] = std::string(to_string(d.code));
  out["message"] = d.message;
  out["line"] = d.line;
  out["column"] = d.column;
  out["expected"] = d.expected;
  return out;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  bool first = true;
  for (const auto& section : report.sections) {
    if (!first) out << "\n";
    first = false;
    out << "== " << section.name << " ==\n";
    for (const auto& e : section.entries) out << e.key << ": " << e.text << "\n";
  }
  if (!report.footnotes.empty()) {
    out << (first ? "" : "\n") << "== footnotes ==\n";
    for (std::size_t k = 0; k < report.footnotes.size(); ++k) {
      out << "[" << k + 1 << "] " << report.footnotes[k] << "\n";
    }
  }
  for (const auto& d : report.diagnostics) out << d.str() << "\n";
  return out.str();
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '%': case '&': case '#': case '$': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '\\': out += "\\textbackslash{}"; break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_latex(const Report& report) {
  std::ostringstream out;
  out << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n";
  for (const auto& section : report.sections) {
    out << "\\section*{" << latex_escape(section.name) << "}\n";
    if (section.entries.empty()) continue;
    out << "\\begin{align*}\n";
    for (std::size_t k = 0; k < section.entries.size(); ++k) {
      const auto& e = section.entries[k];
      out << e.latex_key << " &= " << e.latex;
      out << (k + 1 < section.entries.size() ? " \\\\\n" : "\n");
    }
    out << "\\end{align*}\n";
  }
  if (!report.footnotes.empty()) {
    out << "\\section*{footnotes}\n\\begin{enumerate}\n";
    for (const auto& note : report.footnotes) out << "\\item " << latex_escape(note) << "\n";
    out << "\\end{enumerate}\n";
  }
  for (const auto& d : report.diagnostics) out << "% " << d.str() << "\n";
  out << "\\end{document}\n";
  return out.str();
}

std::string render_structured(const Report& report) {
  Json out = Json::object();
  out["system"] = report.system;
  Json analyses = Json::object();
  for (const auto& section : report.sections) {
    Json body = Json::object();
    for (const auto& e : section.entries) body[e.key] = e.json;
    analyses[section.name] = std::move(body);
  }
  out["analyses"] = std::move(analyses);
  out["footnotes"] = report.footnotes;
  if (!report.diagnostics.empty()) {
    Json diags = Json::array();
    for (const auto& d : report.diagnostics) diags.push_back(diagnostic_json(d));
    out["diagnostics"] = std::move(diags);
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Text: return render_text(report);
    case Format::Latex: return render_latex(report);
    case Format::Structured: return render_structured(report);
  }
  return {};
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "latex") return Format::Latex;
  if (name == "structured" || name == "json") return Format::Structured;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + name + "'");
}

}  // namespace bicomplex::cli
