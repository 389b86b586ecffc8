#include "bicomplex/cli/commands.hpp"

#include <sstream>

#include "bicomplex/balance/analyses.hpp"
#include "bicomplex/jetforms/render.hpp"

namespace bicomplex::cli {

using symcore::Rational;

namespace {

const char* const kWeightNote =
    "Each term of y^i Pi_i + z^i_mu F^mu_i enters the quasi-Lagrangian with weight 1/k, "
    "where k is its degree in the fields and their derivatives; a source pairing quadratic "
    "in the fields is therefore halved.";
const char* const kSignNote =
    "The non-divergence part of the quasi-Lagrangian changes sign when a balance law is "
    "multiplied by -1, and its divergence form is unique only up to null Lagrangians; the "
    "Euler-Lagrange components are fixed up to that per-equation sign.";
const char* const kDensityNote =
    "Residuals and source forms are multiplied by the volume density rho.";
const char* const kGodunovOrderNote =
    "The Godunov classification covers zero-order systems only; jet-dependent fluxes or "
    "sources are reported as OrderTooHigh.";

std::string index_key(const char* prefix, std::size_t i) {
  return prefix + std::to_string(i + 1);
}

std::string index_latex(const char* prefix, std::size_t i) {
  return std::string(prefix) + "_{" + std::to_string(i + 1) + "}";
}

Entry poly_entry(const std::string& key, const std::string& latex_key, const Poly& p,
                 const Chart& chart) {
  const std::string text = symcore::to_text(p, chart);
  return {key, latex_key, text, symcore::to_latex(p, chart), text};
}

Entry form_entry(const std::string& key, const std::string& latex_key,
                 const jetforms::Form& w, const Chart& chart) {
  const std::string text = jetforms::to_text(w, chart);
  return {key, latex_key, text, jetforms::to_latex(w, chart), text};
}

Entry rational_entry(const std::string& key, const std::string& latex_key, const Rational& r,
                     const Chart& chart) {
  return {key, latex_key, r.str(), symcore::to_latex(Poly(r), chart), r.str()};
}

Entry rational_list_entry(const std::string& key, const std::string& latex_key,
                          const std::vector<Rational>& values, const Chart& chart) {
  std::string text = "(";
  std::string latex = "\\left(";
  Json json = Json::array();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) {
      text += ", ";
      latex += ", ";
    }
    text += values[k].str();
    latex += symcore::to_latex(Poly(values[k]), chart);
    json.push_back(values[k].str());
  }
  return {key, latex_key, text + ")", latex + "\\right)", json};
}

Entry matrix_entry(const std::string& key, const std::string& latex_key,
                   const std::vector<std::vector<Poly>>& rows, const Chart& chart) {
  std::string text = "[";
  std::string latex = "\\begin{pmatrix}";
  Json json = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    text += i > 0 ? ", [" : "[";
    if (i > 0) latex += " \\\\ ";
    Json row = Json::array();
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const std::string s = symcore::to_text(rows[i][j], chart);
      text += (j > 0 ? ", " : "") + s;
      latex += (j > 0 ? " & " : "") + symcore::to_latex(rows[i][j], chart);
      row.push_back(s);
    }
    text += "]";
    json.push_back(std::move(row));
  }
  return {key, latex_key, text + "]", latex + "\\end{pmatrix}", json};
}

void components(Section& section, const char* prefix, const std::vector<Poly>& values,
                const Chart& chart) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    section.add(poly_entry(index_key(prefix, i), index_latex(prefix, i), values[i], chart));
  }
}

/// "d_t(a) + d_x(b) + r" together with its LaTeX and structured forms.
Entry divergence_entry(const Poly& p, const Chart& chart) {
  const auto split = variational::divergence_split(p, chart.n());
  std::vector<std::string> text;
  std::vector<std::string> latex;
  Json flux = Json::object();
  if (!split.base.is_zero()) {
    text.push_back(symcore::to_text(split.base, chart));
    latex.push_back(symcore::to_latex(split.base, chart));
  }
  for (std::size_t mu = 0; mu < chart.n(); ++mu) {
    const Poly& f = split.flux[mu];
    flux[chart.base_name(mu)] = symcore::to_text(f, chart);
    if (f.is_zero()) continue;
    text.push_back("d_" + chart.base_name(mu) + "(" + symcore::to_text(f, chart) + ")");
    latex.push_back("\\partial_{" + chart.name_latex(chart.base_name(mu)) + "}\\left(" +
                    symcore::to_latex(f, chart) + "\\right)");
  }
  if (!split.remainder.is_zero()) {
    text.push_back("(" + symcore::to_text(split.remainder, chart) + ")");
    latex.push_back("\\left(" + symcore::to_latex(split.remainder, chart) + "\\right)");
  }
  auto join = [](const std::vector<std::string>& parts) {
    if (parts.empty()) return std::string("0");
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
    return out;
  };
  Json json = Json::object();
  json["base"] = symcore::to_text(split.base, chart);
  json["flux"] = std::move(flux);
  json["remainder"] = symcore::to_text(split.remainder, chart);
  return {"divergence_form", "\\tilde{L}", join(text), join(latex), json};
}

Json system_json(const SystemDocument& doc) {
  const Chart& c = doc.chart;
  Json out = Json::object();
  out["title"] = doc.title;
  out["notes"] = doc.notes;
  out["base"] = c.base_names();
  out["fields"] = c.field_names();
  out["density"] = symcore::to_text(c.rho(), c);
  Json flux = Json::array();
  for (const auto& [key, value] : doc.flux) {
    Json rel = Json::object();
    rel["field"] = c.field_name(key.first);
    rel["slot"] = slot_label(c, key.second);
    rel["expr"] = symcore::to_text(value, c);
    flux.push_back(std::move(rel));
  }
  out["flux"] = std::move(flux);
  Json source = Json::array();
  for (const auto& [i, value] : doc.source) {
    Json rel = Json::object();
    rel["field"] = c.field_name(i);
    rel["expr"] = symcore::to_text(value, c);
    source.push_back(std::move(rel));
  }
  out["source"] = std::move(source);
  return out;
}

void equations(Report& report, const balance::BalanceSystem& bs) {
  const Chart& c = bs.chart();
  Section s{"equations", {}};
  components(s, "R", balance::balance_residuals(bs), c);
  s.add(form_entry("K", "K", balance::build_K(bs), c));
  s.add(form_entry("source_form", "I(K)", balance::source_form(bs).form(), c));
  report.sections.push_back(std::move(s));
}

void check(Report& report, const balance::BalanceSystem& bs) {
  const Chart& c = bs.chart();
  const auto h = balance::helmholtz(bs);
  Section hs{"helmholtz", {}};
  hs.flag("closed", h.closed);
  hs.add(form_entry("residual", "dK", h.residual, c));
  if (h.lagrangian) hs.add(poly_entry("lagrangian", "L", *h.lagrangian, c));
  report.sections.push_back(std::move(hs));

  const auto t = balance::trivial_quasi_lagrangian_check(bs);
  Section ts{"trivial_quasi_lagrangian", {}};
  ts.flag("is_trivial", t.is_trivial);
  ts.add(poly_entry("phi", "\\varphi", t.phi, c));
  report.sections.push_back(std::move(ts));

  const auto g = balance::godunov_check(bs);
  Section gs{"godunov", {}};
  gs.flag("zero_order", g.is_zero_order);
  if (g.error) {
    gs.word("error", std::string(to_string(*g.error)));
    report.footnote(kGodunovOrderNote);
  } else {
    for (std::size_t mu = 0; mu < c.n(); ++mu) {
      const std::string name = c.base_name(mu);
      const std::string sub = "_{" + c.name_latex(name) + "}";
      gs.flag("symmetric_" + name, g.flux_symmetric[mu]);
      if (g.potentials[mu]) gs.add(poly_entry("G_" + name, "G" + sub, *g.potentials[mu], c));
    }
    gs.add(poly_entry("source_pairing", "y^{k}\\Pi_{k}", g.source_pairing, c));
    if (g.pairing_constant) {
      gs.add(rational_entry("pairing_constant", "c", *g.pairing_constant, c));
    }
  }
  gs.flag("verdict", g.verdict);
  report.sections.push_back(std::move(gs));
}

void decompose(Report& report, const balance::BalanceSystem& bs) {
  const Chart& c = bs.chart();
  const auto d = balance::decompose(bs);
  Section qs{"quasi_lagrangian", {}};
  qs.add(poly_entry("Ltilde", "\\tilde{L}", d.quasi_lagrangian, c));
  qs.add(divergence_entry(d.quasi_lagrangian, c));
  components(qs, "E", d.el_of_ltilde.components(c.m()), c);
  qs.flag("helmholtz_closed", d.helmholtz_closed);
  qs.flag("trivial_quasi_lagrangian", d.trivial_quasi_lagrangian);
  report.sections.push_back(std::move(qs));

  Section ks{"k_split", {}};
  ks.add(form_entry("lag", "K_{\\mathrm{Lag}}", d.k_lag, c));
  ks.add(form_entry("nlag", "K_{\\mathrm{nLag}}", d.k_nlag, c));
  report.sections.push_back(std::move(ks));

  Section fs{"f_split", {}};
  fs.add(form_entry("godunov_part", "I(K_{\\mathrm{nLag}})", d.godunov_part.form(), c));
  fs.add(form_entry("euler_part", "E(\\tilde{L})", d.el_of_ltilde.form(), c));
  report.sections.push_back(std::move(fs));

  bool any_source = false;
  for (std::size_t i = 0; i < bs.m(); ++i) any_source = any_source || !bs.source(i).is_zero();
  if (any_source) report.footnote(kWeightNote);
  report.footnote(kSignNote);
}

void hyperbolic(Report& report, const balance::BalanceSystem& bs, const RunOptions& options) {
  if (!options.at) {
    throw Error(ErrorCode::InvalidArgument, "'hyperbolic' needs --at with n + m rationals");
  }
  const Chart& c = bs.chart();
  const auto h = balance::symmetric_hyperbolicity(bs, parse_point(*options.at));
  Section s{"hyperbolicity", {}};
  s.add(rational_list_entry("point", "(x, y)", h.point, c));
  for (std::size_t mu = 0; mu < c.n(); ++mu) {
    const std::string name = c.base_name(mu);
    const std::string sub = "^{" + c.name_latex(name) + "}";
    s.add(matrix_entry("M_" + name, "M" + sub, h.matrices[mu], c));
    s.flag("symmetric_" + name, h.symmetric[mu]);
  }
  s.add(rational_list_entry("leading_minors", "\\Delta", h.leading_minors, c));
  s.word("status", h.status == balance::HyperbolicityStatus::Ok ? "Ok" : "SingularPoint");
  s.flag("verdict", h.verdict);
  report.sections.push_back(std::move(s));
}

void higher(Report& report, const SystemDocument& doc) {
  const auto data = doc.higher_data();
  Section s{"higher_order", {}};
  components(s, "R", variational::higher_balance_residual(data), doc.chart);
  s.add(form_entry("K", "K", variational::higher_balance_form(data), doc.chart));
  report.sections.push_back(std::move(s));
}

void verify(Report& report, const SystemDocument& doc, const RunOptions& options) {
  if (!options.section_text) {
    throw Error(ErrorCode::InvalidArgument, "'verify' needs --section with a section file");
  }
  const Chart& c = doc.chart;
  const auto section = parse_section(*options.section_text, c);
  const auto residuals = doc.is_higher_order()
                             ? variational::higher_balance_residual(doc.higher_data())
                             : balance::balance_residuals(doc.balance_system());
  Section s{"section_check", {}};
  for (std::size_t i = 0; i < c.m(); ++i) {
    s.add(poly_entry(c.field_name(i), c.name_latex(c.field_name(i)), section[i], c));
  }
  bool all_zero = true;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    const Poly value = balance::evaluate_on_section(residuals[i], section);
    all_zero = all_zero && value.is_zero();
    s.add(poly_entry(index_key("R", i), index_latex("R", i), value, c));
  }
  s.flag("all_zero", all_zero);
  report.sections.push_back(std::move(s));
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "equations") return Command::Equations;
  if (name == "check") return Command::Check;
  if (name == "decompose") return Command::Decompose;
  if (name == "hyperbolic") return Command::Hyperbolic;
  if (name == "higher") return Command::Higher;
  if (name == "verify") return Command::Verify;
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + name + "'");
}

std::string command_name(Command command) {
  switch (command) {
    case Command::Equations: return "equations";
    case Command::Check: return "check";
    case Command::Decompose: return "decompose";
    case Command::Hyperbolic: return "hyperbolic";
    case Command::Higher: return "higher";
    case Command::Verify: return "verify";
  }
  return {};
}

Report empty_report(const SystemDocument* doc) {
  Report report;
  if (doc != nullptr) report.system = system_json(*doc);
  return report;
}

Report run(Command command, const SystemDocument& doc, const RunOptions& options) {
  Report report = empty_report(&doc);
  if (!doc.chart.unit_density() && command != Command::Hyperbolic) {
    report.footnote(kDensityNote);
  }
  switch (command) {
    case Command::Higher: higher(report, doc); return report;
    case Command::Verify: verify(report, doc, options); return report;
    default: break;
  }
  const auto bs = doc.balance_system();
  switch (command) {
    case Command::Equations: equations(report, bs); break;
    case Command::Check: check(report, bs); break;
    case Command::Decompose: decompose(report, bs); break;
    case Command::Hyperbolic: hyperbolic(report, bs, options); break;
    default: break;
  }
  return report;
}

}  // namespace bicomplex::cli
