#include "bicomplex/jetforms/render.hpp"

#include <vector>

namespace bicomplex::jetforms {

namespace {

struct Style {
  bool latex = false;
  const Chart* chart = nullptr;

  std::string poly(const Poly& p) const {
    return latex ? symcore::to_latex(p, *chart) : symcore::to_text(p, *chart);
  }
  std::string dx(std::size_t mu) const {
    if (!latex) return "d" + chart->base_name(mu);
    std::string name = chart->name_latex(chart->base_name(mu));
    while (!name.empty() && name.back() == ' ') name.pop_back();
    return "d" + name;
  }
  std::string omega(const ContactGen& g) const {
    if (!latex) return "w[" + chart->var_name(g.var()) + "]";
    std::string field = chart->name_latex(chart->field_name(g.field));
    while (!field.empty() && field.back() == ' ') field.pop_back();
    std::string out = "\\omega^{" + field + "}";
    if (g.lambda.order() > 0) out += "_{" + chart->suffix_latex(g.lambda) + "}";
    return out;
  }
  std::string eta() const { return latex ? "\\eta" : "eta"; }
  std::string join() const { return latex ? " \\wedge " : " ^ "; }
  std::string open() const { return latex ? "\\left(" : "("; }
  std::string close() const { return latex ? "\\right)" : ")"; }
};

std::string render(const Form& w, const Style& style) {
  if (w.is_zero()) return "0";
  const Chart& chart = *style.chart;
  std::string out;
  bool first = true;
  for (const auto& [basis, raw] : w.terms()) {
    Poly coeff = raw;
    std::vector<std::string> factors;
    bool with_eta = false;
    if (basis.s() == chart.n() && basis.s() > 0) {
      if (auto q = symcore::try_divide(raw, chart.rho())) {
        // rho dx-volume ^ w^c = (-1)^{n r} w^c ^ eta
        coeff = (chart.n() * basis.r()) % 2 == 1 ? -*q : *q;
        with_eta = true;
      }
    }
    if (!with_eta) {
      for (std::size_t mu : basis.dx) factors.push_back(style.dx(mu));
    }
    for (const ContactGen& g : basis.omega) factors.push_back(style.omega(g));
    if (with_eta) factors.push_back(style.eta());

    std::string body;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k > 0) body += style.join();
      body += factors[k];
    }

    bool negative = false;
    std::string c;
    if (coeff.size() == 1) {
      negative = coeff.leading().coeff.sign() < 0;
      const Poly magnitude = negative ? -coeff : coeff;
      if (!(magnitude == Poly(1)) || body.empty()) c = style.poly(magnitude);
    } else {
      c = style.open() + style.poly(coeff) + style.close();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += c;
    if (!c.empty() && !body.empty()) out += " ";
    out += body;
  }
  return out;
}

}  // namespace

std::string to_text(const Form& w, const Chart& chart) {
  return render(w, Style{false, &chart});
}

std::string to_latex(const Form& w, const Chart& chart) {
  return render(w, Style{true, &chart});
}

}  // namespace bicomplex::jetforms
