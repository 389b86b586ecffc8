#include <cctype>
#include <optional>
#include <sstream>

#include "bicomplex/cli/diagnostic.hpp"
#include "bicomplex/cli/document.hpp"

namespace bicomplex::cli {

using symcore::Rational;
using symcore::VarRef;

std::string Diagnostic::str() const {
  std::ostringstream out;
  if (line > 0) out << line << ":" << column << ": ";
  out << "error[" << to_string(code) << "]: " << message;
  if (!expected.empty()) {
    out << " (expected ";
    if (expected.size() > 1) out << "one of: ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (k > 0) out << ", ";
      out << expected[k];
    }
    out << ")";
  }
  return out.str();
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InternalInvariant:
    case ErrorCode::BidegreeError:
    case ErrorCode::NotFunctional:
    case ErrorCode::NonIntegrable:
      return 3;
    default:
      return 2;
  }
}

namespace {

enum class Tok {
  Name, Jet, Number, String, Semi, Newline, LBracket, RBracket, Comma,
  LParen, RParen, Equals, Plus, Minus, Star, Slash, Caret, End
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::Jet: return "derivative";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::Semi: return "';'";
    case Tok::Newline: return "newline";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;    // name, number digits, string body, or field of a jet
  std::string suffix;  // jet suffix
  std::size_t line = 1;
  std::size_t column = 1;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message, std::size_t line,
                       std::size_t column, std::vector<std::string> expected = {}) {
  throw DiagnosticError(Diagnostic{code, message, line, column, std::move(expected)});
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    int depth = 0;
    while (true) {
      skip_blanks();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (c == '\n') {
        advance();
        if (depth > 0) continue;
        t.kind = Tok::Newline;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        t.text = word();
        if (pos_ + 1 < text_.size() && text_[pos_] == '_' &&
            std::isalpha(static_cast<unsigned char>(text_[pos_ + 1]))) {
          advance();
          t.kind = Tok::Jet;
          t.suffix = word();
        } else {
          t.kind = Tok::Name;
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          t.text += text_[pos_];
          advance();
        }
      } else if (c == '"') {
        t.kind = Tok::String;
        t.text = string_body(t);
      } else {
        t.kind = punctuation(c, t);
        if (t.kind == Tok::LParen || t.kind == Tok::LBracket) ++depth;
        if ((t.kind == Tok::RParen || t.kind == Tok::RBracket) && depth > 0) --depth;
        advance();
      }
      out.push_back(t);
    }
  }

 private:
  void advance() {
    const auto byte = static_cast<unsigned char>(text_[pos_]);
    ++pos_;
    if (byte == '\n') {
      ++line_;
      column_ = 1;
    } else if ((byte & 0xC0) != 0x80) {
      // count code points, not continuation bytes
      ++column_;
    }
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string word() {
    std::string out;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  std::string string_body(const Token& start) {
    advance();
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        fail(ErrorCode::ParseError, "unterminated string", start.line, start.column, {"'\"'"});
      }
      const std::size_t line = line_;
      const std::size_t column = column_;
      char c = text_[pos_];
      advance();
      if (c == '"') return out;
      if (c == '\\' && pos_ < text_.size()) {
        c = text_[pos_];
        if (c != '"' && c != '\\') {
          fail(ErrorCode::ParseError, "unknown escape in string", line, column,
               {"'\\\"'", "'\\\\'"});
        }
        advance();
      }
      out += c;
    }
  }

  Tok punctuation(char c, const Token& t) const {
    switch (c) {
      case ';': return Tok::Semi;
      case '[': return Tok::LBracket;
      case ']': return Tok::RBracket;
      case ',': return Tok::Comma;
      case '(': return Tok::LParen;
      case ')': return Tok::RParen;
      case '=': return Tok::Equals;
      case '+': return Tok::Plus;
      case '-': return Tok::Minus;
      case '*': return Tok::Star;
      case '/': return Tok::Slash;
      case '^': return Tok::Caret;
      default: break;
    }
    std::string shown(1, c);
    if (static_cast<unsigned char>(c) >= 0x80 || !std::isprint(static_cast<unsigned char>(c))) {
      shown = "non-ASCII or control character";
    } else {
      shown = "'" + shown + "'";
    }
    fail(ErrorCode::ParseError, "unexpected character " + shown, t.line, t.column);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool starts_primary(const Token& t) {
  return t.kind == Tok::Name || t.kind == Tok::Jet || t.kind == Tok::Number ||
         t.kind == Tok::LParen;
}

const std::vector<std::string> kPrimary = {"number", "name", "derivative", "'('"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  SystemDocument document() {
    std::string title;
    std::vector<std::string> notes;
    std::optional<std::vector<std::string>> base;
    std::optional<Chart> chart;
    bool density_seen = false;
    bool relations_seen = false;
    std::set<std::pair<std::size_t, MultiIndex>> flux_keys;
    std::set<std::size_t> source_keys;
    std::map<std::pair<std::size_t, MultiIndex>, Poly> flux;
    std::map<std::size_t, Poly> source;

    while (true) {
      skip_terminators();
      const Token& t = peek();
      if (t.kind == Tok::End) break;
      if (is_word(t, "title") || is_word(t, "note")) {
        const bool is_title = t.text == "title";
        next();
        const Token s = expect(Tok::String);
        if (is_title) {
          title = s.text;
        } else {
          notes.push_back(s.text);
        }
      } else if (!base) {
        if (!is_word(t, "base")) error(t, "a system starts with its base coordinates", {"base"});
        next();
        base = names("base coordinate");
      } else if (!chart) {
        if (!is_word(t, "fields")) error(t, "base coordinates are followed by fields", {"fields"});
        const Token start = next();
        const std::vector<std::string> fields = names("field");
        chart = make_chart(*base, fields, Poly(1), start);
      } else if (is_word(t, "density")) {
        if (density_seen || relations_seen) {
          error(t, density_seen ? "density declared twice" : "density must precede relations",
                {"F", "Pi"});
        }
        const Token start = next();
        const Token at = peek();
        const Poly rho = expression(*chart);
        if (rho.has_vertical()) {
          fail(ErrorCode::InvalidChart, "density may depend on base coordinates only", at.line,
               at.column);
        }
        chart = make_chart(chart->base_names(), chart->field_names(), rho, start);
        density_seen = true;
      } else if (is_relation(t, "F")) {
        const Token start = next();
        expect(Tok::LBracket);
        const std::size_t field = field_ref(*chart);
        expect(Tok::Comma);
        const MultiIndex lambda = slot(*chart);
        expect(Tok::RBracket);
        expect(Tok::Equals);
        const Poly value = expression(*chart);
        if (!flux_keys.insert({field, lambda}).second) {
          fail(ErrorCode::DuplicateRelation,
               "duplicate relation F[" + chart->field_name(field) + "," +
                   slot_label(*chart, lambda) + "]",
               start.line, start.column);
        }
        if (!value.is_zero()) flux[{field, lambda}] = value;
        relations_seen = true;
      } else if (is_relation(t, "Pi")) {
        const Token start = next();
        expect(Tok::LBracket);
        const std::size_t field = field_ref(*chart);
        expect(Tok::RBracket);
        expect(Tok::Equals);
        const Poly value = expression(*chart);
        if (!source_keys.insert(field).second) {
          fail(ErrorCode::DuplicateRelation, "duplicate relation Pi[" + chart->field_name(field) + "]",
               start.line, start.column);
        }
        if (!value.is_zero()) source[field] = value;
        relations_seen = true;
      } else {
        std::vector<std::string> expected{"F", "Pi", "title", "note"};
        if (!density_seen && !relations_seen) expected.insert(expected.begin(), "density");
        error(t, "unexpected " + shown(t), expected);
      }
      end_statement();
    }
    if (!chart) {
      const Token& t = peek();
      error(t, "missing chart declaration", {base ? "fields" : "base"});
    }
    return SystemDocument{std::move(title), std::move(notes), std::move(*chart), std::move(flux),
                          std::move(source)};
  }

  std::vector<Poly> section(const Chart& chart) {
    std::vector<std::optional<Poly>> values(chart.m());
    while (true) {
      skip_terminators();
      const Token& t = peek();
      if (t.kind == Tok::End) break;
      const std::size_t field = field_ref(chart);
      expect(Tok::Equals);
      const Token at = peek();
      Poly value = expression(chart);
      if (value.has_vertical()) {
        fail(ErrorCode::InvalidArgument, "section components may use base coordinates only",
             at.line, at.column);
      }
      if (values[field]) {
        fail(ErrorCode::DuplicateRelation, "field " + chart.field_name(field) + " given twice",
             t.line, t.column);
      }
      values[field] = std::move(value);
      end_statement();
    }
    std::vector<Poly> out;
    for (std::size_t i = 0; i < chart.m(); ++i) {
      if (!values[i]) {
        fail(ErrorCode::InvalidArgument, "section has no value for field " + chart.field_name(i),
             peek().line, peek().column, {chart.field_name(i)});
      }
      out.push_back(std::move(*values[i]));
    }
    return out;
  }

  Poly lone_expression(const Chart& chart) {
    skip_terminators();
    Poly p = expression(chart);
    skip_terminators();
    if (peek().kind != Tok::End) error(peek(), "unexpected " + shown(peek()), {"end of input"});
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  static std::string shown(const Token& t) {
    switch (t.kind) {
      case Tok::Name: return "name '" + t.text + "'";
      case Tok::Jet: return "derivative '" + t.text + "_" + t.suffix + "'";
      case Tok::Number: return "number " + t.text;
      case Tok::String: return "string";
      default: return describe(t.kind);
    }
  }

  [[noreturn]] static void error(const Token& t, const std::string& message,
                                 std::vector<std::string> expected) {
    fail(ErrorCode::ParseError, message, t.line, t.column, std::move(expected));
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) {
      error(peek(), "unexpected " + shown(peek()), {describe(kind)});
    }
    return next();
  }

  static bool is_word(const Token& t, std::string_view w) {
    return t.kind == Tok::Name && t.text == w;
  }
  bool is_relation(const Token& t, std::string_view w) const {
    return is_word(t, w) && peek(1).kind == Tok::LBracket;
  }

  void skip_terminators() {
    while (peek().kind == Tok::Semi || peek().kind == Tok::Newline) next();
  }

  void end_statement() {
    const Token& t = peek();
    if (t.kind == Tok::Semi || t.kind == Tok::Newline || t.kind == Tok::End) return;
    error(t, "unexpected " + shown(t), {"';'", "newline", "end of input"});
  }

  std::vector<std::string> names(const char* what) {
    std::vector<std::string> out;
    while (peek().kind == Tok::Name) {
      const Token t = next();
      if (!symcore::is_valid_name(t.text)) {
        fail(ErrorCode::InvalidChart, "'" + t.text + "' is a reserved word", t.line, t.column);
      }
      out.push_back(t.text);
    }
    if (out.empty()) error(peek(), std::string("expected at least one ") + what, {"name"});
    return out;
  }

  static Chart make_chart(const std::vector<std::string>& base,
                          const std::vector<std::string>& fields, const Poly& rho,
                          const Token& at) {
    try {
      return Chart(base, fields, rho);
    } catch (const Error& e) {
      fail(e.code(), e.what(), at.line, at.column);
    }
  }

  std::size_t field_ref(const Chart& chart) {
    const Token t = peek();
    if (t.kind != Tok::Name) error(t, "unexpected " + shown(t), {"field name"});
    next();
    const auto i = chart.field_index(t.text);
    if (!i) {
      fail(ErrorCode::UndeclaredName, "'" + t.text + "' is not a declared field", t.line,
           t.column, chart.field_names());
    }
    return *i;
  }

  MultiIndex slot(const Chart& chart) {
    const Token t = peek();
    if (t.kind == Tok::LParen) {
      next();
      const MultiIndex lambda = counts(chart, t);
      expect(Tok::RParen);
      if (lambda.order() == 0) {
        fail(ErrorCode::ParseError, "flux slots need at least one derivative", t.line, t.column);
      }
      return lambda;
    }
    if (t.kind != Tok::Name) error(t, "unexpected " + shown(t), {"coordinate", "'('"});
    next();
    return word_index(chart, t.text, t);
  }

  MultiIndex counts(const Chart& chart, const Token& at) {
    MultiIndex lambda(chart.n());
    for (std::size_t mu = 0; mu < chart.n(); ++mu) {
      if (mu > 0) expect(Tok::Comma);
      const Token num = expect(Tok::Number);
      if (num.text.size() > 3 || std::stoul(num.text) > 255) {
        fail(ErrorCode::ParseError, "derivative count too large", num.line, num.column);
      }
      for (unsigned long k = std::stoul(num.text); k > 0; --k) lambda = lambda.raised(mu);
    }
    (void)at;
    return lambda;
  }

  static MultiIndex word_index(const Chart& chart, const std::string& word, const Token& at) {
    const auto options = chart.decompose_suffix(word);
    if (options.empty()) {
      fail(ErrorCode::UndeclaredName, "'" + word + "' is not a word in the base coordinates",
           at.line, at.column, chart.base_names());
    }
    if (options.size() > 1) {
      fail(ErrorCode::ParseError, "'" + word + "' splits into coordinates in more than one way",
           at.line, at.column, {"numeric form d(field;counts)"});
    }
    return options.front();
  }

  // expr := term (('+' | '-') term)*
  Poly expression(const Chart& chart) {
    Poly out = term(chart);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      const Poly rhs = term(chart);
      out = minus ? out - rhs : out + rhs;
    }
    return out;
  }

  // term := unary (('*' | '/')? unary)*; juxtaposition multiplies.
  Poly term(const Chart& chart) {
    Poly out = unary(chart);
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::Star) {
        next();
        out = out * unary(chart);
      } else if (t.kind == Tok::Slash) {
        next();
        const Token at = peek();
        const Poly d = unary(chart);
        if (!d.is_constant()) {
          fail(ErrorCode::ParseError, "division is only allowed by a constant", at.line, at.column);
        }
        if (d.is_zero()) fail(ErrorCode::ParseError, "division by zero", at.line, at.column);
        out = out.scaled(Rational(1) / d.constant_value());
      } else if (starts_primary(t)) {
        out = out * unary(chart);
      } else {
        return out;
      }
    }
  }

  // unary := ('-' | '+') unary | power
  Poly unary(const Chart& chart) {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary(chart);
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary(chart);
    }
    return power(chart);
  }

  // power := primary ('^' number)?
  Poly power(const Chart& chart) {
    Poly base = primary(chart);
    if (peek().kind == Tok::Caret) {
      next();
      const Token e = peek();
      if (e.kind != Tok::Number) error(e, "exponents are non-negative integers", {"number"});
      next();
      if (e.text.size() > 4 || std::stoul(e.text) > 1000) {
        fail(ErrorCode::ParseError, "exponent too large", e.line, e.column);
      }
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Poly primary(const Chart& chart) {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return Poly(Rational::parse(t.text));
      case Tok::LParen: {
        next();
        Poly inner = expression(chart);
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Jet: {
        next();
        const auto i = chart.field_index(t.text);
        if (!i) {
          fail(ErrorCode::UndeclaredName, "'" + t.text + "' is not a declared field", t.line,
               t.column, chart.field_names());
        }
        return Poly::variable(chart.z(*i, word_index(chart, t.suffix, t)));
      }
      case Tok::Name: {
        if (t.text == "d" && peek(1).kind == Tok::LParen) return numeric_jet(chart);
        next();
        if (auto mu = chart.base_index(t.text)) return Poly::variable(chart.x(*mu));
        if (auto i = chart.field_index(t.text)) return Poly::variable(chart.y(*i));
        std::vector<std::string> known = chart.base_names();
        known.insert(known.end(), chart.field_names().begin(), chart.field_names().end());
        fail(ErrorCode::UndeclaredName, "'" + t.text + "' is not declared", t.line, t.column,
             known);
      }
      default:
        error(t, t.kind == Tok::End || t.kind == Tok::Semi || t.kind == Tok::Newline
                     ? "missing expression"
                     : "unexpected " + shown(t),
              kPrimary);
    }
  }

  // d(field; c_1, ..., c_n)
  Poly numeric_jet(const Chart& chart) {
    const Token start = next();
    expect(Tok::LParen);
    const std::size_t i = field_ref(chart);
    expect(Tok::Semi);
    const MultiIndex lambda = counts(chart, start);
    expect(Tok::RParen);
    return Poly::variable(chart.z(i, lambda));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SystemDocument parse_system(std::string_view text) {
  return Parser(Lexer(text).run()).document();
}

std::vector<Poly> parse_section(std::string_view text, const Chart& chart) {
  return Parser(Lexer(text).run()).section(chart);
}

Poly parse_expression(std::string_view text, const Chart& chart) {
  return Parser(Lexer(text).run()).lone_expression(chart);
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  std::size_t column = 1;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string piece(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    const auto first = piece.find_first_not_of(" \t");
    const auto last = piece.find_last_not_of(" \t");
    piece = first == std::string::npos ? "" : piece.substr(first, last - first + 1);
    try {
      out.push_back(Rational::parse(piece));
    } catch (const Error&) {
      fail(ErrorCode::InvalidArgument, "'" + piece + "' is not a rational number", 1, column,
           {"p", "p/q"});
    }
    if (comma == std::string_view::npos) return out;
    column += comma - start + 1;
    start = comma + 1;
  }
}

bool SystemDocument::is_higher_order() const {
  for (const auto& [key, value] : flux) {
    if (key.second.order() >= 2) return true;
  }
  return false;
}

balance::BalanceSystem SystemDocument::balance_system() const {
  if (is_higher_order()) {
    throw Error(ErrorCode::UnsupportedInput,
                "flux slots with two or more derivatives are only supported by 'higher'");
  }
  std::vector<std::vector<Poly>> f(chart.m(), std::vector<Poly>(chart.n()));
  std::vector<Poly> pi(chart.m());
  for (const auto& [key, value] : flux) {
    std::size_t mu = 0;
    while (key.second[mu] == 0) ++mu;
    f[key.first][mu] = value;
  }
  for (const auto& [i, value] : source) pi[i] = value;
  return balance::BalanceSystem(chart, std::move(f), std::move(pi));
}

variational::HigherBalanceData SystemDocument::higher_data() const {
  variational::HigherBalanceData out{chart, {}};
  for (const auto& [key, value] : flux) out.coefficients[key] = value;
  for (const auto& [i, value] : source) out.coefficients[{i, MultiIndex(chart.n())}] = value;
  return out;
}

std::string slot_label(const Chart& chart, const MultiIndex& lambda) {
  const std::string word = chart.suffix(lambda);
  if (chart.decompose_suffix(word).size() == 1) return word;
  std::string out = "(";
  for (std::size_t mu = 0; mu < lambda.n(); ++mu) {
    if (mu > 0) out += ",";
    out += std::to_string(lambda[mu]);
  }
  return out + ")";
}

std::string to_text(const SystemDocument& doc) {
  const Chart& c = doc.chart;
  std::ostringstream out;
  if (!doc.title.empty()) out << "title " << quoted(doc.title) << "\n";
  for (const auto& note : doc.notes) out << "note " << quoted(note) << "\n";
  out << "base";
  for (const auto& name : c.base_names()) out << " " << name;
  out << "\nfields";
  for (const auto& name : c.field_names()) out << " " << name;
  out << "\n";
  if (!c.unit_density()) out << "density " << symcore::to_text(c.rho(), c) << "\n";
  for (const auto& [key, value] : doc.flux) {
    out << "F[" << c.field_name(key.first) << "," << slot_label(c, key.second)
        << "] = " << symcore::to_text(value, c) << "\n";
  }
  for (const auto& [i, value] : doc.source) {
    out << "Pi[" << c.field_name(i) << "] = " << symcore::to_text(value, c) << "\n";
  }
  return out.str();
}

}  // namespace bicomplex::cli
