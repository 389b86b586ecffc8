#include "doctest.h"

#include <fstream>
#include <sstream>

#include "bicomplex/cli/commands.hpp"
#include "json.hpp"

using namespace bicomplex::cli;
using bicomplex::Error;
using bicomplex::ErrorCode;
using bicomplex::symcore::Rational;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(BICOMPLEX_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SystemDocument load(const std::string& name) { return parse_system(read_data(name)); }

const Section& section(const Report& r, const std::string& name) {
  for (const auto& s : r.sections) {
    if (s.name == name) return s;
  }
  FAIL("missing section " << name);
  return r.sections.front();
}

const Entry& entry(const Report& r, const std::string& sec, const std::string& key) {
  for (const auto& e : section(r, sec).entries) {
    if (e.key == key) return e;
  }
  FAIL("missing entry " << sec << "." << key);
  return section(r, sec).entries.front();
}

Poly value(const Report& r, const SystemDocument& doc, const std::string& sec,
           const std::string& key) {
  return parse_expression(entry(r, sec, key).text, doc.chart);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("equations on plasticity") {
  const auto doc = load("plasticity.bal");
  const auto r = run(Command::Equations, doc, {});
  const std::string text = render(r, Format::Text);
  CHECK(contains(text, "R1: u_xi + 1/2 v\n"));
  CHECK(value(r, doc, "equations", "R2") == parse_expression("v_eta + 1/2 u", doc.chart));
  CHECK(r.footnotes.empty());
}

TEST_CASE("decompose on Burgers") {
  const auto doc = load("burgers.bal");
  const auto r = run(Command::Decompose, doc, {});
  CHECK(value(r, doc, "quasi_lagrangian", "Ltilde") ==
        parse_expression("u u_t/2 - u^2 u_x/6 - u_x^2/2", doc.chart));
  CHECK(value(r, doc, "quasi_lagrangian", "E1") == parse_expression("u_xx", doc.chart));
  CHECK(entry(r, "quasi_lagrangian", "divergence_form").json["flux"]["x"] ==
        "-1/18 u^3 - 1/2 u u_x");
  CHECK(entry(r, "quasi_lagrangian", "helmholtz_closed").json == false);
  CHECK(r.footnotes.size() == 1);
}

TEST_CASE("decompose on KdV renders the cubic flux term in LaTeX") {
  const auto doc = load("kdv.bal");
  const auto r = run(Command::Decompose, doc, {});
  const std::string latex = render(r, Format::Latex);
  CHECK(contains(latex, "\\partial_{x}\\left(\\frac{1}{3} u^{3} + \\frac{1}{4} u_{x}^{2}\\right)"));
  CHECK(contains(latex, "\\begin{align*}"));
  CHECK(contains(latex, "\\end{document}"));
  CHECK(value(r, doc, "quasi_lagrangian", "E1").is_zero());
  CHECK(entry(r, "quasi_lagrangian", "divergence_form").json["remainder"] == "0");
}

TEST_CASE("footnotes follow the analyses that ran") {
  const auto plas = run(Command::Decompose, load("plasticity.bal"), {});
  CHECK(plas.footnotes.size() == 2);
  CHECK(contains(plas.footnotes[0], "halved"));
  CHECK(value(plas, load("plasticity.bal"), "quasi_lagrangian", "Ltilde") ==
        parse_expression("(u u_xi + v v_eta)/2 - u v/2", load("plasticity.bal").chart));

  const auto filt = run(Command::Decompose, load("filtration.bal"), {});
  CHECK(contains(filt.footnotes.back(), "changes sign"));
  CHECK(run(Command::Check, load("plasticity.bal"), {}).footnotes.empty());

  auto dense = parse_system("base t x; fields u; density 2; F[u,t] = u");
  CHECK(run(Command::Equations, dense, {}).footnotes.size() == 1);
}

TEST_CASE("check on plasticity") {
  const auto doc = load("plasticity.bal");
  const auto r = run(Command::Check, doc, {});
  CHECK(entry(r, "helmholtz", "closed").json == false);
  CHECK(entry(r, "godunov", "verdict").json == false);
  CHECK(entry(r, "godunov", "zero_order").json == true);
  CHECK(value(r, doc, "godunov", "source_pairing") == parse_expression("-u v", doc.chart));
  CHECK(entry(r, "trivial_quasi_lagrangian", "is_trivial").json == false);
}

TEST_CASE("check on a higher-jet system reports OrderTooHigh in the godunov section") {
  const auto r = run(Command::Check, load("burgers.bal"), {});
  CHECK(entry(r, "godunov", "error").text == "OrderTooHigh");
  CHECK(entry(r, "godunov", "verdict").json == false);
}

TEST_CASE("hyperbolic") {
  const auto sq = load("godunov_sum_squares.bal");
  RunOptions at;
  at.at = "0, 0, 1/2, -3";
  const auto r = run(Command::Hyperbolic, sq, at);
  CHECK(entry(r, "hyperbolicity", "verdict").json == true);
  CHECK(entry(r, "hyperbolicity", "status").text == "Ok");

  at.at = "1, 2, 1, 1";
  const auto p = run(Command::Hyperbolic, load("godunov_product.bal"), at);
  CHECK(entry(p, "hyperbolicity", "status").text == "SingularPoint");
  CHECK(entry(p, "hyperbolicity", "verdict").json == false);
  CHECK(entry(p, "hyperbolicity", "leading_minors").json ==
        nlohmann::ordered_json::array({"0", "-1/4"}));

  CHECK_THROWS_AS(run(Command::Hyperbolic, sq, {}), Error);
  at.at = "1, 2";
  CHECK_THROWS_AS(run(Command::Hyperbolic, sq, at), Error);
  at.at = "0,0,0";
  CHECK_THROWS_AS(run(Command::Hyperbolic, load("burgers.bal"), at), Error);
}

TEST_CASE("higher and verify") {
  const auto doc = load("fourth_order.bal");
  const auto r = run(Command::Higher, doc, {});
  CHECK(value(r, doc, "higher_order", "R1") == parse_expression("-u_xxxx", doc.chart));
  try {
    run(Command::Decompose, doc, {});
    FAIL("expected UnsupportedInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedInput);
  }

  RunOptions opts;
  opts.section_text = read_data("constant.section");
  const auto v = run(Command::Verify, load("burgers.bal"), opts);
  CHECK(entry(v, "section_check", "all_zero").json == true);
  CHECK(entry(v, "section_check", "R1").text == "0");

  opts.section_text = "u = x^2";
  const auto w = run(Command::Verify, load("burgers.bal"), opts);
  CHECK(entry(w, "section_check", "all_zero").json == false);
  CHECK(value(w, load("burgers.bal"), "section_check", "R1") ==
        parse_expression("-2 x^3 - 2", load("burgers.bal").chart));

  opts.section_text = "u = t x";
  const auto h = run(Command::Verify, doc, opts);
  CHECK(entry(h, "section_check", "all_zero").json == true);
  CHECK_THROWS_AS(run(Command::Verify, doc, {}), Error);
}

TEST_CASE("structured output schema and determinism") {
  for (const char* name : {"burgers.bal", "plasticity.bal", "kdv.bal", "filtration.bal",
                           "hyperelasticity.bal", "conservation.bal"}) {
    const auto doc = load(name);
    for (Command c : {Command::Equations, Command::Check, Command::Decompose}) {
      const std::string a = render(run(c, doc, {}), Format::Structured);
      const std::string b = render(run(c, load(name), {}), Format::Structured);
      CHECK(a == b);
      const auto j = nlohmann::ordered_json::parse(a);
      CHECK(j.contains("system"));
      CHECK(j.contains("analyses"));
      CHECK(j.contains("footnotes"));
      CHECK_FALSE(j.contains("diagnostics"));
      CHECK(j["system"]["base"] == nlohmann::ordered_json(doc.chart.base_names()));
    }
  }
  Report e = empty_report(nullptr);
  e.diagnostics.push_back({ErrorCode::ParseError, "bad", 2, 3, {"number"}});
  const auto j = nlohmann::ordered_json::parse(render(e, Format::Structured));
  CHECK(j["diagnostics"][0]["code"] == "ParseError");
  CHECK(j["diagnostics"][0]["column"] == 3);
}

TEST_CASE("exit statuses and names") {
  CHECK(exit_status(ErrorCode::ParseError) == 2);
  CHECK(exit_status(ErrorCode::OrderTooHigh) == 2);
  CHECK(exit_status(ErrorCode::IoError) == 2);
  CHECK(exit_status(ErrorCode::InternalInvariant) == 3);
  CHECK(exit_status(ErrorCode::NotFunctional) == 3);
  for (Command c : {Command::Equations, Command::Check, Command::Decompose, Command::Hyperbolic,
                    Command::Higher, Command::Verify}) {
    CHECK(parse_command(command_name(c)) == c);
  }
  CHECK_THROWS_AS(parse_command("solve"), Error);
  CHECK(parse_format("latex") == Format::Latex);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}
